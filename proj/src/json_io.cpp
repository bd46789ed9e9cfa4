#include "affinefc/json_io.hpp"

#include "affinefc/errors.hpp"

namespace affinefc {

using nlohmann::json;

json to_json(const FcElement& fc) {
    json j;
    j["family"] = family_name(fc.graph().family());
    if (fc.graph().family() == Family::Generic)
        j["rank"] = fc.graph().rank();
    else
        j["n"] = fc.graph().n();
    j["layers"] = fc.layers();
    return j;
}

FcElement fc_from_json(const json& j) {
    const std::string fam = j.at("family").get<std::string>();
    GraphPtr graph;
    if (fam == "D")
        graph = make_affine_d(j.at("n").get<int>());
    else if (fam == "B")
        graph = make_affine_b(j.at("n").get<int>());
    else
        throw DomainError("fc_from_json supports families D and B");
    std::vector<int> w;
    for (const auto& layer : j.at("layers"))
        for (const auto& s : layer) w.push_back(s.get<int>());
    return cartier_foata(make_word(std::move(graph), std::move(w)));
}

json to_json(const Heap& heap) {
    json j;
    j["labels"] = heap.labels;
    j["covers"] = json::array();
    for (auto [a, b] : heap.covers) j["covers"].push_back({a, b});
    return j;
}

json to_json(const StarMove& move) {
    return json{{"side", move.side == Side::Left ? "L" : "R"},
                {"s", move.s},
                {"t", move.t},
                {"weak", move.weak}};
}

json to_json(const ReductionTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        json s = to_json(step.move);
        s["result"] = to_json(step.result);
        steps.push_back(std::move(s));
    }
    return json{{"start", to_json(trace.start)}, {"steps", std::move(steps)},
                {"end", to_json(trace.end())}};
}

json to_json(const Classification& cls) {
    json params = json::object();
    for (const auto& [key, value] : cls.params) params[key] = value;
    return json{{"class", cls.cls}, {"params", std::move(params)}};
}

namespace {

json endpoint_json(const DiagramEndpoint& e) {
    return json::array({e.south ? "S" : "N", e.index});
}

DiagramEndpoint endpoint_from_json(const json& j) {
    DiagramEndpoint e;
    e.south = j.at(0).get<std::string>() == "S";
    e.index = j.at(1).get<int>();
    return e;
}

std::string word_string(const std::vector<DecoSym>& word) {
    std::string s;
    for (const auto& sym : word) s += sym.deco == Deco::Bullet ? 'b' : 'w';
    return s;
}

}  // namespace

json to_json(const DecoratedDiagram& d) {
    json edges = json::array();
    for (const auto& e : d.edges())
        edges.push_back(
            json{{"from", endpoint_json(e.a)}, {"to", endpoint_json(e.b)}, {"dec", word_string(e.word)}});
    json loops{{"b", d.loop_count(LoopType::Bullet)},
               {"w", d.loop_count(LoopType::Circ)},
               {"bw", d.loop_count(LoopType::Mixed)}};
    return json{{"k", d.k()}, {"edges", std::move(edges)}, {"loops", std::move(loops)},
                {"delta", d.delta_exp()}};
}

DecoratedDiagram diagram_from_json(const json& j) {
    RawDiagram raw;
    raw.k = j.at("k").get<int>();
    raw.delta_exp = j.value("delta", 0);
    int level = 0;
    for (const auto& je : j.at("edges")) {
        DiagramEdge e;
        e.a = endpoint_from_json(je.at("from"));
        e.b = endpoint_from_json(je.at("to"));
        for (char c : je.value("dec", std::string{})) {
            if (c != 'b' && c != 'w') throw DomainError("decoration letters must be b or w");
            e.word.push_back({c == 'b' ? Deco::Bullet : Deco::Circ, level++});
        }
        raw.edges.push_back(std::move(e));
    }
    if (j.contains("loops")) {
        const auto& loops = j.at("loops");
        for (int i = 0; i < loops.value("b", 0); ++i)
            raw.raw_loops.push_back({{Deco::Bullet, level++}});
        for (int i = 0; i < loops.value("w", 0); ++i)
            raw.raw_loops.push_back({{Deco::Circ, level++}});
        for (int i = 0; i < loops.value("bw", 0); ++i) {
            raw.raw_loops.push_back({{Deco::Bullet, level}, {Deco::Circ, level}});
            ++level;
        }
    }
    return canonicalize(std::move(raw));
}

}  // namespace affinefc
