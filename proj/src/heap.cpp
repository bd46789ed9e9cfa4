#include "affinefc/heap.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "affinefc/errors.hpp"

namespace affinefc {

namespace {

std::vector<std::vector<char>> closure_of_word(const CoxeterGraph& g, const std::vector<int>& w) {
    const int r = static_cast<int>(w.size());
    std::vector<std::vector<char>> below(r, std::vector<char>(r, 0));
    for (int j = 0; j < r; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            if (g.linked(w[i], w[j])) {
                below[i][j] = 1;
                continue;
            }
            for (int k = i + 1; k < j; ++k) {
                if (below[i][k] && below[k][j]) {
                    below[i][j] = 1;
                    break;
                }
            }
        }
    }
    return below;
}

// Kuhn's augmenting-path matching; the closure is small at desk scale.
int max_matching(const std::vector<std::vector<char>>& adj) {
    const int r = static_cast<int>(adj.size());
    std::vector<int> match_right(r, -1);
    std::vector<char> seen;

    std::function<bool(int)> augment = [&](int u) -> bool {
        for (int v = 0; v < r; ++v) {
            if (!adj[u][v] || seen[v]) continue;
            seen[v] = 1;
            if (match_right[v] < 0 || augment(match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };

    int matched = 0;
    for (int u = 0; u < r; ++u) {
        seen.assign(r, 0);
        if (augment(u)) ++matched;
    }
    return matched;
}

// Blocks of {a,b}-labeled occurrences separated by the sep-occurrence
// chain; returns the number of blocks containing both labels.
int fork_factor_count(const FcElement& fc, int a, int b, int sep) {
    const auto w = fc.word();
    const auto below = closure_of_word(fc.graph(), w);
    const int r = static_cast<int>(w.size());

    std::set<int> blocks_a, blocks_b;
    for (int i = 0; i < r; ++i) {
        if (w[i] != a && w[i] != b) continue;
        int block = 0;
        for (int z = 0; z < r; ++z)
            if (w[z] == sep && below[z][i]) ++block;
        (w[i] == a ? blocks_a : blocks_b).insert(block);
    }
    int count = 0;
    for (int blk : blocks_a)
        if (blocks_b.count(blk)) ++count;
    return count;
}

}  // namespace

Heap heap_of(const FcElement& fc) {
    const auto w = fc.word();
    const auto below = closure_of_word(fc.graph(), w);
    const int r = static_cast<int>(w.size());

    Heap heap;
    heap.labels = w;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (int k = i + 1; k < j && cover; ++k) cover = !(below[i][k] && below[k][j]);
            if (cover) heap.covers.emplace_back(i, j);
        }
    }
    return heap;
}

std::vector<std::vector<char>> heap_order(const Heap& heap) {
    const int r = heap.size();
    std::vector<std::vector<char>> below(r, std::vector<char>(r, 0));
    for (auto [i, j] : heap.covers) below[i][j] = 1;
    for (int k = 0; k < r; ++k)
        for (int i = 0; i < r; ++i)
            if (below[i][k])
                for (int j = 0; j < r; ++j)
                    if (below[k][j]) below[i][j] = 1;
    return below;
}

int n_value(const FcElement& fc) {
    const auto w = fc.word();
    if (w.empty()) return 0;
    const auto below = closure_of_word(fc.graph(), w);
    return static_cast<int>(w.size()) - max_matching(below);
}

int f_bullet(const FcElement& fc) {
    if (fc.graph().family() != Family::AffineD)
        throw WrongFamilyError("f_bullet is defined for AffineD only");
    return fork_factor_count(fc, 0, 1, 2);
}

int f_circ(const FcElement& fc) {
    if (fc.graph().family() != Family::AffineD)
        throw WrongFamilyError("f_circ is defined for AffineD only");
    const int n = fc.graph().n();
    return fork_factor_count(fc, n + 1, n + 2, n);
}

}  // namespace affinefc
