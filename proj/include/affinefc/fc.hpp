#pragma once

#include <optional>
#include <vector>

#include "affinefc/coxeter.hpp"

namespace affinefc {

/// Outcome of testing a word.
///
/// A word fails with NotReduced when it contains a deletable pair: two
/// occurrences of the same letter with no linked letter between them, so
/// that commutation moves bring them together as s*s.  It fails with
/// NotFc when some word in its commutation class contains the braid
/// factor sts... of length m(s,t) for a finite bond >= 3.  Words of
/// non-FC elements and most non-reduced words surface as NotFc; the two
/// flags record which obstruction was found first.
enum class WordStatus { ReducedFc, NotReduced, NotFc };

WordStatus classify_word(const Word& word);

/// True iff the word is a reduced expression of a fully commutative
/// element (Stembridge's criterion, checked on the heap of the word).
bool is_fully_commutative(const Word& word);

/// A fully commutative element stored by its Cartier-Foata layer
/// sequence.  Layers are sorted ascending, making equality structural;
/// the empty layer list is the identity.
class FcElement {
public:
    static FcElement identity(GraphPtr graph);
    /// Throws NotReducedError / NotFullyCommutativeError.
    static FcElement from_word(const Word& word);

    const CoxeterGraph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const std::vector<std::vector<int>>& layers() const { return layers_; }

    int length() const;
    bool is_identity() const { return layers_.empty(); }

    /// Concatenation of the layers: the canonical reduced word.
    std::vector<int> word() const;
    std::vector<int> support() const;

    std::vector<int> left_descents() const;
    std::vector<int> right_descents() const;
    bool has_left_descent(int s) const;

    FcElement inverse() const;
    /// Removes a left descent s and renormalizes.  Throws IllegalMoveError
    /// when s is not a left descent.
    FcElement strip_left(int s) const;

    /// Flat encoding used as a map key: n, family, layers with -1 breaks.
    std::vector<int> key() const;

    bool operator==(const FcElement& other) const;
    bool operator<(const FcElement& other) const { return key() < other.key(); }

private:
    FcElement(GraphPtr graph, std::vector<std::vector<int>> layers)
        : graph_(std::move(graph)), layers_(std::move(layers)) {}

    friend FcElement cartier_foata(const Word& word);

    GraphPtr graph_;
    std::vector<std::vector<int>> layers_;
};

/// Cartier-Foata normal form of a reduced word of an FC element; the
/// layer of each occurrence is its height in the heap, so the result is
/// independent of the chosen word in the commutation class.
FcElement cartier_foata(const Word& word);

}  // namespace affinefc
