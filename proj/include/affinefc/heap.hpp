#pragma once

#include <utility>
#include <vector>

#include "affinefc/fc.hpp"

namespace affinefc {

/// Labeled poset on the letter occurrences of an FC element.  Covers
/// generate the order; linear extensions read off as words are exactly
/// the reduced expressions.
struct Heap {
    std::vector<int> labels;
    std::vector<std::pair<int, int>> covers;

    int size() const { return static_cast<int>(labels.size()); }
};

Heap heap_of(const FcElement& fc);

/// below[i][j] iff i lies strictly below j.
std::vector<std::vector<char>> heap_order(const Heap& heap);

/// Size of a maximum antichain, via Dilworth: a minimum chain cover is
/// computed as size minus a maximum matching of the closure, seen as a
/// bipartite graph.
int n_value(const FcElement& fc);

/// Largest number of s0*s1 factors over all reduced expressions
/// (AffineD only).  Computed on the heap: the occurrences labeled 0 or 1
/// fall into blocks separated by the chain of 2-occurrences; a block
/// holding both labels contributes one factor.
int f_bullet(const FcElement& fc);
/// Mirror statistic for s_{n+1}*s_{n+2} factors, separated by n.
int f_circ(const FcElement& fc);

}  // namespace affinefc
