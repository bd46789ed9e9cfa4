#include "affinefc/fc.hpp"

#include <algorithm>
#include <set>

#include "affinefc/errors.hpp"

namespace affinefc {

namespace {

// Transitive closure of the heap order of a word: below[i][j] iff the
// occurrence at position i lies strictly below the one at position j.
// Direct relations go forward in word order between linked letters, so
// every path is increasing and one O(r^3) sweep suffices.
std::vector<std::vector<char>> heap_closure(const CoxeterGraph& g, const std::vector<int>& w) {
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

// A deletable pair: consecutive occurrences of the same letter with no
// linked letter between them in word order.  Commutation moves then
// bring the two copies together, so the word is not reduced.
bool has_deletable_pair(const CoxeterGraph& g, const std::vector<int>& w) {
    const int r = static_cast<int>(w.size());
    for (int q = 0; q < r; ++q) {
        for (int p = q - 1; p >= 0; --p) {
            if (w[p] != w[q]) continue;
            bool separated = false;
            for (int k = p + 1; k < q && !separated; ++k)
                separated = g.linked(w[k], w[q]) && w[k] != w[q];
            if (!separated) return true;
            break;  // only the nearest earlier occurrence matters
        }
    }
    return false;
}

// A braid factor [st]_m is realizable in the commutation class iff the
// {s,t}-labeled occurrences contain m consecutive entries with
// alternating labels forming a convex chain of the heap.
bool has_braid_factor(const CoxeterGraph& g, const std::vector<int>& w,
                      const std::vector<std::vector<char>>& below) {
    const int r = static_cast<int>(w.size());
    for (int s = 0; s < g.rank(); ++s) {
        for (int t = s + 1; t < g.rank(); ++t) {
            if (!g.braid_bond(s, t)) continue;
            const int m = g.bond(s, t);
            std::vector<int> chain;
            for (int i = 0; i < r; ++i)
                if (w[i] == s || w[i] == t) chain.push_back(i);
            if (static_cast<int>(chain.size()) < m) continue;
            for (std::size_t idx = 0; idx + m <= chain.size(); ++idx) {
                bool alternating = true;
                for (int j = 1; j < m && alternating; ++j)
                    alternating = w[chain[idx + j]] != w[chain[idx + j - 1]];
                if (!alternating) continue;
                const int first = chain[idx];
                const int last = chain[idx + m - 1];
                bool convex = true;
                for (int z = 0; z < r && convex; ++z) {
                    if (z >= first && z <= last) {
                        bool in_window = false;
                        for (int j = 0; j < m && !in_window; ++j) in_window = chain[idx + j] == z;
                        if (in_window) continue;
                    }
                    convex = !(below[first][z] && below[z][last]);
                }
                if (convex) return true;
            }
        }
    }
    return false;
}

std::vector<std::vector<int>> layer_word(const CoxeterGraph& g, const std::vector<int>& w) {
    std::vector<std::vector<int>> layers;
    std::vector<int> layer_of(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        int lvl = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (g.linked(w[i], w[j])) lvl = std::max(lvl, layer_of[i] + 1);
        layer_of[j] = lvl;
        if (static_cast<std::size_t>(lvl) == layers.size()) layers.emplace_back();
        layers[lvl].push_back(w[j]);
    }
    for (auto& layer : layers) std::sort(layer.begin(), layer.end());
    return layers;
}

}  // namespace

WordStatus classify_word(const Word& word) {
    const CoxeterGraph& g = *word.graph;
    for (int s : word.letters) g.require_generator(s);
    if (has_deletable_pair(g, word.letters)) return WordStatus::NotReduced;
    const auto below = heap_closure(g, word.letters);
    if (has_braid_factor(g, word.letters, below)) return WordStatus::NotFc;
    return WordStatus::ReducedFc;
}

bool is_fully_commutative(const Word& word) {
    return classify_word(word) == WordStatus::ReducedFc;
}

FcElement FcElement::identity(GraphPtr graph) {
    if (!graph) throw DomainError("identity requires a graph");
    return FcElement(std::move(graph), {});
}

FcElement FcElement::from_word(const Word& word) { return cartier_foata(word); }

FcElement cartier_foata(const Word& word) {
    switch (classify_word(word)) {
        case WordStatus::NotReduced:
            throw NotReducedError("word is not reduced (deletable pair)");
        case WordStatus::NotFc:
            throw NotFullyCommutativeError("word has a braid factor");
        case WordStatus::ReducedFc:
            break;
    }
    return FcElement(word.graph, layer_word(*word.graph, word.letters));
}

int FcElement::length() const {
    int len = 0;
    for (const auto& layer : layers_) len += static_cast<int>(layer.size());
    return len;
}

std::vector<int> FcElement::word() const {
    std::vector<int> w;
    for (const auto& layer : layers_) w.insert(w.end(), layer.begin(), layer.end());
    return w;
}

std::vector<int> FcElement::support() const {
    std::set<int> supp;
    for (const auto& layer : layers_)
        for (int s : layer) supp.insert(s);
    return {supp.begin(), supp.end()};
}

std::vector<int> FcElement::left_descents() const {
    return layers_.empty() ? std::vector<int>{} : layers_.front();
}

std::vector<int> FcElement::right_descents() const { return inverse().left_descents(); }

bool FcElement::has_left_descent(int s) const {
    if (layers_.empty()) return false;
    return std::binary_search(layers_.front().begin(), layers_.front().end(), s);
}

FcElement FcElement::inverse() const {
    std::vector<int> w = word();
    std::reverse(w.begin(), w.end());
    return cartier_foata(Word{graph_, std::move(w)});
}

FcElement FcElement::strip_left(int s) const {
    if (!has_left_descent(s)) throw IllegalMoveError("letter is not a left descent");
    std::vector<int> w;
    for (std::size_t i = 0; i < layers_.size(); ++i)
        for (int x : layers_[i])
            if (i != 0 || x != s) w.push_back(x);
    return cartier_foata(Word{graph_, std::move(w)});
}

std::vector<int> FcElement::key() const {
    std::vector<int> k;
    k.push_back(static_cast<int>(graph_->family()));
    k.push_back(graph_->rank());
    k.push_back(graph_->n());
    for (const auto& layer : layers_) {
        k.insert(k.end(), layer.begin(), layer.end());
        k.push_back(-1);
    }
    return k;
}

bool FcElement::operator==(const FcElement& other) const {
    if (layers_ != other.layers_) return false;
    if (graph_ == other.graph_) return true;
    return *graph_ == *other.graph_;
}

}  // namespace affinefc
