#pragma once

#include <string>
#include <utility>
#include <vector>

#include "affinefc/fc.hpp"
#include "affinefc/star.hpp"

namespace affinefc {

enum class IrreducibleClassD { CC, CZ, Candy };
enum class IrreducibleClassBStar { CC, Candy, CZBullet };
enum class IrreducibleClassBWeak { CCw, Candy, LeftCandy, CZ };

/// Class tag plus the parameters pinning the element inside its family
/// (k/h/side for zigzags, m/x0/y0 for candies).
struct Classification {
    std::string cls;
    std::vector<std::pair<std::string, int>> params;
};

/// Family constructors.  All return the CFNF element and validate full
/// commutativity on the way.
FcElement complete_zigzag_d(GraphPtr graph, bool bullet_end, int k, int h);
FcElement complete_zigzag_b(GraphPtr graph, int form, int k, int h);
FcElement candy_d(GraphPtr graph, int m, int x0, int y0);
FcElement candy_b(GraphPtr graph, int m, int x0);
FcElement left_candy_b(GraphPtr graph, int m, int x0);

bool is_complete_zigzag(const FcElement& fc);
/// A factor of some complete zigzag that is not completely commutative.
/// Decided by a bounded search over complete zigzags of length at most
/// l(fc) + 2(n+1) + 2; a factor never needs a longer ambient zigzag.
bool is_weak_zigzag(const FcElement& fc);

/// Whether u equals some factor x of z with z = v x y reduced.
bool is_factor(const FcElement& u, const FcElement& z);

/// Classifiers for star-irreducible elements.  They check the
/// irreducibility precondition and that exactly one family pattern
/// matches, throwing NotIrreducibleError / WrongFamilyError otherwise.
Classification classify_irreducible_d(const FcElement& fc);
Classification classify_irreducible_b(const FcElement& fc, StarMode mode);

IrreducibleClassD irreducible_class_d(const FcElement& fc);
IrreducibleClassBStar irreducible_class_b_star(const FcElement& fc);
IrreducibleClassBWeak irreducible_class_b_weak(const FcElement& fc);

/// The injective map FC(affine B, n) -> FC(affine D, n): braid factors
/// involving the weight-4 bond are rewritten, everything else is read
/// verbatim in the larger graph.  Occurrences are detected as convex
/// alternating triples on the heap and consumed greedily left to right.
FcElement phi(const FcElement& fc);

}  // namespace affinefc
