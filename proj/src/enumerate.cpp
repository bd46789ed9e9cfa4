#include "affinefc/enumerate.hpp"

#include <map>
#include <set>
#include <string>

#include "affinefc/errors.hpp"

namespace affinefc {

void enumerate_fc(const EnumerationConfig& config,
                  const std::function<void(const FcElement&)>& visit) {
    if (!config.graph) throw DomainError("enumeration requires a graph");
    if (config.max_length < 0) throw DomainError("max_length must be >= 0");

    long long produced = 0;
    auto emit = [&](const FcElement& fc) {
        if (++produced > config.element_budget)
            throw BudgetExceededError("enumeration exceeded element budget");
        visit(fc);
    };

    std::vector<FcElement> frontier{FcElement::identity(config.graph)};
    emit(frontier.front());

    const int rank = config.graph->rank();
    for (int len = 1; len <= config.max_length; ++len) {
        std::map<std::vector<int>, FcElement> next;
        for (const FcElement& fc : frontier) {
            std::vector<int> w = fc.word();
            w.push_back(0);
            for (int g = 0; g < rank; ++g) {
                w.back() = g;
                Word candidate{config.graph, w};
                if (classify_word(candidate) != WordStatus::ReducedFc) continue;
                FcElement ext = cartier_foata(candidate);
                next.emplace(ext.key(), std::move(ext));
            }
        }
        frontier.clear();
        for (auto& [key, fc] : next) {
            emit(fc);
            frontier.push_back(std::move(fc));
        }
        if (frontier.empty()) break;
    }
}

std::vector<FcElement> collect_fc(const EnumerationConfig& config) {
    std::vector<FcElement> out;
    enumerate_fc(config, [&](const FcElement& fc) { out.push_back(fc); });
    return out;
}

std::vector<std::vector<int>> all_reduced_expressions(const FcElement& fc, int guard) {
    if (fc.length() > guard)
        throw BudgetExceededError("all_reduced_expressions: length exceeds guard " +
                                  std::to_string(guard));
    const CoxeterGraph& g = fc.graph();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{fc.word()};
    seen.insert(queue.front());
    while (!queue.empty()) {
        std::vector<int> w = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (!g.commute(w[i], w[i + 1])) continue;
            std::swap(w[i], w[i + 1]);
            if (seen.insert(w).second) queue.push_back(w);
            std::swap(w[i], w[i + 1]);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace affinefc
