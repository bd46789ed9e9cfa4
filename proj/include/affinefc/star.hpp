#pragma once

#include <cstddef>
#include <vector>

#include "affinefc/fc.hpp"

namespace affinefc {

enum class Side { Left, Right };
enum class StarMode { Star, WeakStar };
enum class ReductionPolicy { FirstMove, LeftOnly, RightOnly, Exhaustive };

/// A legal length-decreasing star move: s is a descent on the given
/// side and t witnesses it, i.e. t is a descent of the shortened
/// element with m(s,t) >= 3.  The move is weak when additionally
/// [st]_{m-1} is a prefix (left) resp. its inverse a suffix (right), so
/// that multiplying by t leaves the FC set.
struct StarMove {
    Side side;
    int s;
    int t;
    bool weak;

    bool operator==(const StarMove&) const = default;
};

/// All legal moves of the requested kind, Left before Right, each side
/// ordered lexicographically by (s, t).
std::vector<StarMove> available_moves(const FcElement& fc, StarMode mode);

bool is_irreducible(const FcElement& fc, StarMode mode);

/// Applies a move previously obtained from available_moves; throws
/// IllegalMoveError otherwise.
FcElement apply_move(const FcElement& fc, const StarMove& move);

struct ReductionStep {
    StarMove move;
    FcElement result;
};

struct ReductionTrace {
    FcElement start;
    std::vector<ReductionStep> steps;

    const FcElement& end() const { return steps.empty() ? start : steps.back().result; }
    int depth() const { return static_cast<int>(steps.size()); }
};

/// Deterministic single-trace policies.  FirstMove always applies the
/// first available move; LeftOnly / RightOnly restrict to one side and
/// stop when that side is exhausted (their endpoints are unique).
ReductionTrace reduce_to_irreducible(const FcElement& fc, StarMode mode, ReductionPolicy policy);

/// Every maximal reduction sequence.  All traces end at the same depth;
/// exceeding trace_cap raises BudgetExceededError.
std::vector<ReductionTrace> reduce_exhaustive(const FcElement& fc, StarMode mode,
                                              std::size_t trace_cap = 1'000'000);

}  // namespace affinefc
