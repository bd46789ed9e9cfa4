#pragma once

#include <functional>
#include <vector>

#include "affinefc/fc.hpp"

namespace affinefc {

struct EnumerationConfig {
    GraphPtr graph;
    int max_length = 0;
    long long element_budget = 5'000'000;
};

/// Visits every FC element of length <= max_length exactly once, in
/// length order (identity first).  Frontier extension on the right:
/// every element of length l has a right descent, so extending the
/// length l-1 frontier by single letters and deduplicating by CFNF is
/// complete.  Throws BudgetExceededError past element_budget.
void enumerate_fc(const EnumerationConfig& config,
                  const std::function<void(const FcElement&)>& visit);

std::vector<FcElement> collect_fc(const EnumerationConfig& config);

/// All reduced expressions: the commutation closure of the canonical
/// word, i.e. the linear extensions of the heap.  Guarded by length.
std::vector<std::vector<int>> all_reduced_expressions(const FcElement& fc, int guard = 12);

}  // namespace affinefc
