#include "affinefc/coxeter.hpp"

namespace affinefc {

std::string family_name(Family f) {
    switch (f) {
        case Family::AffineD: return "D";
        case Family::AffineB: return "B";
        case Family::Generic: return "generic";
    }
    return "?";
}

CoxeterGraph::CoxeterGraph(Family family, int n, int rank)
    : family_(family), n_(n), rank_(rank), bond_(static_cast<std::size_t>(rank) * rank, 2) {
    for (int s = 0; s < rank; ++s) bond_[static_cast<std::size_t>(s) * rank + s] = 1;
}

namespace {

void set_bond(std::vector<int>& b, int rank, int s, int t, int m) {
    b[static_cast<std::size_t>(s) * rank + t] = m;
    b[static_cast<std::size_t>(t) * rank + s] = m;
}

}  // namespace

CoxeterGraph CoxeterGraph::affine_d(int n) {
    if (n < 2) throw DomainError("affine_d requires n >= 2");
    CoxeterGraph g(Family::AffineD, n, n + 3);
    set_bond(g.bond_, g.rank_, 0, 2, 3);
    set_bond(g.bond_, g.rank_, 1, 2, 3);
    for (int i = 2; i < n; ++i) set_bond(g.bond_, g.rank_, i, i + 1, 3);
    set_bond(g.bond_, g.rank_, n, n + 1, 3);
    set_bond(g.bond_, g.rank_, n, n + 2, 3);
    return g;
}

CoxeterGraph CoxeterGraph::affine_b(int n) {
    if (n < 2) throw DomainError("affine_b requires n >= 2");
    CoxeterGraph g(Family::AffineB, n, n + 2);
    set_bond(g.bond_, g.rank_, 0, 2, 3);
    set_bond(g.bond_, g.rank_, 1, 2, 3);
    for (int i = 2; i < n; ++i) set_bond(g.bond_, g.rank_, i, i + 1, 3);
    set_bond(g.bond_, g.rank_, n, n + 1, 4);
    return g;
}

CoxeterGraph CoxeterGraph::generic(const std::vector<std::vector<int>>& bond) {
    const int rank = static_cast<int>(bond.size());
    if (rank == 0) throw DomainError("generic graph needs at least one generator");
    CoxeterGraph g(Family::Generic, 0, rank);
    for (int s = 0; s < rank; ++s) {
        if (static_cast<int>(bond[s].size()) != rank)
            throw DomainError("bond matrix is not square");
        for (int t = 0; t < rank; ++t) {
            const int m = bond[s][t];
            if (bond[t][s] != m) throw DomainError("bond matrix is not symmetric");
            if (s == t) {
                if (m != 1) throw DomainError("diagonal bonds must be 1");
            } else if (m != infinite_bond && m < 2) {
                throw DomainError("off-diagonal bonds must be >= 2 or infinite");
            }
            g.bond_[static_cast<std::size_t>(s) * rank + t] = m;
        }
    }
    return g;
}

void CoxeterGraph::require_generator(int s) const {
    if (!valid_generator(s))
        throw DomainError("generator index " + std::to_string(s) + " out of range for rank " +
                          std::to_string(rank_));
}

GraphPtr make_affine_d(int n) { return std::make_shared<const CoxeterGraph>(CoxeterGraph::affine_d(n)); }
GraphPtr make_affine_b(int n) { return std::make_shared<const CoxeterGraph>(CoxeterGraph::affine_b(n)); }
GraphPtr make_generic(const std::vector<std::vector<int>>& bond) {
    return std::make_shared<const CoxeterGraph>(CoxeterGraph::generic(bond));
}

Word make_word(GraphPtr graph, std::vector<int> letters) {
    if (!graph) throw DomainError("word requires a graph");
    for (int s : letters) graph->require_generator(s);
    return Word{std::move(graph), std::move(letters)};
}

}  // namespace affinefc
