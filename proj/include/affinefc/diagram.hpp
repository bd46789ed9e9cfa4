#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affinefc/fc.hpp"

namespace affinefc {

enum class Deco : std::uint8_t { Bullet, Circ };

/// One decoration symbol together with the vertical position (the
/// composition layer) it was created at.  Levels only matter while the
/// diagram has a single non-propagating edge per face, where the
/// reduction rules are scoped to decoration strips; they are
/// dense-ranked in canonical forms and cleared once a(D) > 1.
struct DecoSym {
    Deco deco;
    int level = 0;
    bool operator==(const DecoSym&) const = default;
};

/// Node on the frame of the k-box: north or south face, index 1..k.
struct DiagramEndpoint {
    bool south = false;
    int index = 1;
    auto operator<=>(const DiagramEndpoint&) const = default;
};

struct DiagramEdge {
    DiagramEndpoint a, b;        // a < b, decoration word read from a to b
    std::vector<DecoSym> word;   // reduced: no two adjacent equal symbols
    bool operator==(const DiagramEdge&) const = default;
};

enum class LoopType : std::uint8_t { Bullet, Circ, Mixed };

struct DiagramLoop {
    LoopType type = LoopType::Bullet;
    int bullet_level = -1;
    int circ_level = -1;
    bool operator==(const DiagramLoop&) const = default;
};

/// Pre-canonical material: a perfect planar pairing whose edges carry
/// arbitrary decoration words, plus closed loops as cyclic words.
struct RawDiagram {
    int k = 0;
    std::vector<DiagramEdge> edges;
    std::vector<std::vector<DecoSym>> raw_loops;
    int delta_exp = 0;
};

/// Canonical form of a basis monomial delta^e * D of the quotient
/// diagram algebra.  Two diagrams represent the same monomial iff their
/// stored fields are equal.
class DecoratedDiagram {
public:
    static DecoratedDiagram identity(int k);

    int k() const { return k_; }
    const std::vector<DiagramEdge>& edges() const { return edges_; }
    const std::vector<DiagramLoop>& loops() const { return loops_; }
    int delta_exp() const { return delta_; }

    int loop_count(LoopType t) const;
    /// Number of north-north edges.
    int a_value() const;

    /// Compact text form, also the dedup key.
    std::string repr() const;

    bool operator==(const DecoratedDiagram&) const = default;
    bool operator<(const DecoratedDiagram& other) const { return repr() < other.repr(); }

private:
    friend DecoratedDiagram canonicalize_impl(RawDiagram, std::mt19937_64*);

    DecoratedDiagram() = default;

    int k_ = 0;
    std::vector<DiagramEdge> edges_;
    std::vector<DiagramLoop> loops_;
    int delta_ = 0;
};

/// Monomials delta^e * D are the only scalars the engine needs, and the
/// exponent lives inside the diagram.
using DiagramTerm = DecoratedDiagram;

/// The generator diagram D_i on k = n+2 nodes per face.
DecoratedDiagram simple_diagram(int i, int n);

/// Stacks top over bottom, concatenates decoration words along the
/// traversed paths and canonicalizes.  Left factors go on top, so the
/// first letter of a product shows on the north face.
DecoratedDiagram compose(const DecoratedDiagram& top, const DecoratedDiagram& bottom);

/// The stacking step alone, for callers that canonicalize separately.
RawDiagram compose_raw(const DecoratedDiagram& top, const DecoratedDiagram& bottom);

/// Runs the reduction system to its normal form: adjacent equal
/// decorations cancel, undecorated loops turn into delta factors, and a
/// single-bullet (single-circ) loop absorbs matching decorations
/// elsewhere, scoped to its strip when a(D) <= 1.
DecoratedDiagram canonicalize(RawDiagram raw);
/// Same fixpoint, applying the applicable reductions in random order.
DecoratedDiagram canonicalize_randomized(RawDiagram raw, std::mt19937_64& rng);

DecoratedDiagram diagram_of(const FcElement& fc);

int a_value(const DecoratedDiagram& d);
/// a(D) plus the loop census correction; equals n(w) on D = D_w.
int a_tilde(const DecoratedDiagram& d);

/// Whether D_i * D_w = delta * D_w, the diagram-side descent test.
bool has_left_descent_diagrammatic(const DecoratedDiagram& dw, int i);

}  // namespace affinefc
