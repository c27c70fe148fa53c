#pragma once

// The blocked-off relation between two column prefixes.  Rows are 1-based;
// only rows 1..i of each column are read.

#include <cstdlib>
#include <vector>

#include "weyl.hpp"

namespace krm {

enum class BlockBranch { None, BStyle, DStyle };

struct BlockedOffReport {
    bool blocked = false;
    int position = 0;
    int bound = 0;
    BlockBranch branch = BlockBranch::None;

    explicit operator bool() const { return blocked; }
};

namespace detail {

inline bool covers_abs(const Column& c, int i, int lo, int hi) {
    for (int v = lo; v <= hi; ++v) {
        bool hit = false;
        for (int r = 0; r < i && !hit; ++r) hit = std::abs(c[r]) == v;
        if (!hit) return false;
    }
    return true;
}

inline bool blocked_b_style(int n, const Column& left, const Column& right, int i) {
    int l = left[i - 1], b = right[i - 1];
    if (b <= 0 || b >= n || l == b || std::abs(l) > b) return false;
    if (!covers_abs(left, i, 1, b) || !covers_abs(right, i, 1, b)) return false;
    int odd = 0;
    for (int r = 0; r < i; ++r)
        if (left[r] < 0 && right[r] > 0) odd ^= 1;
    return odd;
}

// mirror image: b barred, the letters |b|..n fill the prefixes, +- rows odd
inline bool blocked_d_style(int n, const Column& left, const Column& right, int i) {
    int l = left[i - 1], b = right[i - 1];
    if (b >= 0 || l == b || std::abs(l) < -b) return false;
    if (!covers_abs(left, i, -b, n) || !covers_abs(right, i, -b, n)) return false;
    int odd = 0;
    for (int r = 0; r < i; ++r)
        if (left[r] > 0 && right[r] < 0) odd ^= 1;
    return odd;
}

} // namespace detail

// Types A and C never block.
inline BlockedOffReport is_blocked_off(const LieType& t, const Column& left, const Column& right, int i) {
    BlockedOffReport rep;
    rep.position = i;
    if (i < 1 || i > static_cast<int>(left.size()) || i > static_cast<int>(right.size())) return rep;
    rep.bound = right[i - 1];
    if (t.family != Family::B && t.family != Family::D) return rep;
    if (detail::blocked_b_style(t.rank, left, right, i)) {
        rep.blocked = true;
        rep.branch = BlockBranch::BStyle;
    } else if (t.family == Family::D && detail::blocked_d_style(t.rank, left, right, i)) {
        rep.blocked = true;
        rep.branch = BlockBranch::DStyle;
    }
    return rep;
}

inline bool blocked_off(const LieType& t, const Column& left, const Column& right, int i) {
    return is_blocked_off(t, left, right, i).blocked;
}

} // namespace krm
