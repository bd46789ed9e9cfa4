#include "affinefc/star.hpp"

#include <algorithm>
#include <tuple>

#include "affinefc/errors.hpp"

namespace affinefc {

namespace {

// xi_{s,t} = [st]_{m-1} is a prefix: strip the alternating letters
// s, t, s, ... one descent at a time.
bool has_alternating_prefix(const FcElement& fc, int s, int t, int count) {
    FcElement cur = fc;
    int expected = s;
    for (int i = 0; i < count; ++i) {
        if (!cur.has_left_descent(expected)) return false;
        cur = cur.strip_left(expected);
        expected = (expected == s) ? t : s;
    }
    return true;
}

bool left_move_is_weak(const FcElement& fc, int s, int t) {
    const int m = fc.graph().bond(s, t);
    if (m == 3) return true;  // xi = st, already forced by the move being legal
    return has_alternating_prefix(fc, s, t, m - 1);
}

// Left moves only; Right moves are the mirrored left moves of the
// inverse element.
std::vector<StarMove> left_moves(const FcElement& fc, StarMode mode, Side tag) {
    std::vector<StarMove> moves;
    for (int s : fc.left_descents()) {
        const FcElement sw = fc.strip_left(s);
        for (int t : sw.left_descents()) {
            if (!fc.graph().braid_bond(s, t)) continue;
            const bool weak = left_move_is_weak(fc, s, t);
            if (mode == StarMode::WeakStar && !weak) continue;
            moves.push_back(StarMove{tag, s, t, weak});
        }
    }
    std::sort(moves.begin(), moves.end(), [](const StarMove& a, const StarMove& b) {
        return std::tie(a.s, a.t) < std::tie(b.s, b.t);
    });
    return moves;
}

}  // namespace

std::vector<StarMove> available_moves(const FcElement& fc, StarMode mode) {
    std::vector<StarMove> moves = left_moves(fc, mode, Side::Left);
    const std::vector<StarMove> right = left_moves(fc.inverse(), mode, Side::Right);
    moves.insert(moves.end(), right.begin(), right.end());
    return moves;
}

bool is_irreducible(const FcElement& fc, StarMode mode) {
    return available_moves(fc, mode).empty();
}

FcElement apply_move(const FcElement& fc, const StarMove& move) {
    const FcElement oriented = (move.side == Side::Left) ? fc : fc.inverse();
    if (!oriented.has_left_descent(move.s)) throw IllegalMoveError("s is not a descent");
    const FcElement stripped = oriented.strip_left(move.s);
    if (!fc.graph().braid_bond(move.s, move.t) || !stripped.has_left_descent(move.t))
        throw IllegalMoveError("t does not witness the move");
    if (move.weak != left_move_is_weak(oriented, move.s, move.t))
        throw IllegalMoveError("weak flag does not match the move");
    return (move.side == Side::Left) ? stripped : stripped.inverse();
}

ReductionTrace reduce_to_irreducible(const FcElement& fc, StarMode mode, ReductionPolicy policy) {
    if (policy == ReductionPolicy::Exhaustive)
        throw DomainError("use reduce_exhaustive for the Exhaustive policy");
    ReductionTrace trace{fc, {}};
    FcElement cur = fc;
    for (;;) {
        std::vector<StarMove> moves = available_moves(cur, mode);
        if (policy == ReductionPolicy::LeftOnly)
            std::erase_if(moves, [](const StarMove& m) { return m.side != Side::Left; });
        if (policy == ReductionPolicy::RightOnly)
            std::erase_if(moves, [](const StarMove& m) { return m.side != Side::Right; });
        if (moves.empty()) break;
        cur = apply_move(cur, moves.front());
        trace.steps.push_back(ReductionStep{moves.front(), cur});
    }
    return trace;
}

namespace {

void exhaust(const FcElement& cur, StarMode mode, ReductionTrace& partial,
             std::vector<ReductionTrace>& out, std::size_t cap) {
    const std::vector<StarMove> moves = available_moves(cur, mode);
    if (moves.empty()) {
        if (out.size() >= cap) throw BudgetExceededError("exhaustive reduction exceeded trace cap");
        out.push_back(partial);
        return;
    }
    for (const StarMove& mv : moves) {
        FcElement next = apply_move(cur, mv);
        partial.steps.push_back(ReductionStep{mv, next});
        exhaust(next, mode, partial, out, cap);
        partial.steps.pop_back();
    }
}

}  // namespace

std::vector<ReductionTrace> reduce_exhaustive(const FcElement& fc, StarMode mode,
                                              std::size_t trace_cap) {
    std::vector<ReductionTrace> out;
    ReductionTrace partial{fc, {}};
    exhaust(fc, mode, partial, out, trace_cap);
    return out;
}

}  // namespace affinefc
