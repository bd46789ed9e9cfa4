#pragma once

#include <json.hpp>

#include "affinefc/classify.hpp"
#include "affinefc/diagram.hpp"
#include "affinefc/heap.hpp"
#include "affinefc/star.hpp"

namespace affinefc {

nlohmann::json to_json(const FcElement& fc);
FcElement fc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Heap& heap);
nlohmann::json to_json(const StarMove& move);
nlohmann::json to_json(const ReductionTrace& trace);
nlohmann::json to_json(const Classification& cls);
nlohmann::json to_json(const DecoratedDiagram& d);
DecoratedDiagram diagram_from_json(const nlohmann::json& j);

}  // namespace affinefc
