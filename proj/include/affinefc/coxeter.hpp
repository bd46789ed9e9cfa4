#pragma once

#include <memory>
#include <string>
#include <vector>

#include "affinefc/errors.hpp"

namespace affinefc {

enum class Family { AffineD, AffineB, Generic };

std::string family_name(Family f);

/// A Coxeter matrix over generators 0..rank-1.
///
/// Bonds are stored as plain ints with m(s,s) = 1 and 0 standing for an
/// infinite bond.  The two affine families used throughout are
///
///   affine_d(n): generators 0..n+2, the chain 2-3-...-n with forks
///                {0,1} attached to 2 and {n+1,n+2} attached to n,
///                every edge of weight 3;
///   affine_b(n): generators 0..n+1, the fork {0,1} attached to 2, the
///                chain 2-3-...-n, and a terminal edge n-(n+1) of
///                weight 4.
///
/// Both require n >= 2 so that the fork and the central chain exist.
class CoxeterGraph {
public:
    static constexpr int infinite_bond = 0;

    static CoxeterGraph affine_d(int n);
    static CoxeterGraph affine_b(int n);
    /// Any symmetric matrix with m(s,s)=1 and m(s,t) in {2,3,...} or 0.
    static CoxeterGraph generic(const std::vector<std::vector<int>>& bond);

    Family family() const { return family_; }
    int n() const { return n_; }
    int rank() const { return rank_; }

    int bond(int s, int t) const { return bond_[static_cast<std::size_t>(s) * rank_ + t]; }
    bool commute(int s, int t) const { return bond(s, t) == 2; }
    /// s and t are linked when they do not commute: equal letters, a
    /// finite bond >= 3, or an infinite bond.
    bool linked(int s, int t) const { return bond(s, t) != 2; }
    /// Finite bond >= 3, i.e. a genuine braid relation exists.
    bool braid_bond(int s, int t) const { return bond(s, t) >= 3; }

    bool valid_generator(int s) const { return 0 <= s && s < rank_; }
    void require_generator(int s) const;

    bool operator==(const CoxeterGraph& other) const = default;

private:
    CoxeterGraph(Family family, int n, int rank);

    Family family_;
    int n_;
    int rank_;
    std::vector<int> bond_;
};

using GraphPtr = std::shared_ptr<const CoxeterGraph>;

GraphPtr make_affine_d(int n);
GraphPtr make_affine_b(int n);
GraphPtr make_generic(const std::vector<std::vector<int>>& bond);

/// A word in the generators, not assumed reduced.
struct Word {
    GraphPtr graph;
    std::vector<int> letters;
};

/// Validates every letter against the graph; throws DomainError otherwise.
Word make_word(GraphPtr graph, std::vector<int> letters);

}  // namespace affinefc
