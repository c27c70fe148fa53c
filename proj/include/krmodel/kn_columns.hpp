#pragma once

// Kashiwara-Nakashima columns: validity, splitting, extension, the
// single-column KR sets and their tensor products, and the matchings of a
// split pair used to characterize right-half paths.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blocked_off.hpp"
#include "weyl.hpp"

namespace krm {

inline std::vector<int> column_alphabet(const LieType& t) {
    int n = t.rank;
    std::vector<int> a;
    for (int x = 1; x <= n; ++x) a.push_back(x);
    if (t.family == Family::A) return a;
    if (t.family == Family::B) a.push_back(0);
    for (int x = n; x >= 1; --x) a.push_back(-x);
    return a;
}

namespace detail {

inline bool kn_step_ok(const LieType& t, int x, int y) {
    int n = t.rank;
    if (letter_less(x, y, n)) return true;
    if (t.family == Family::B && x == 0 && y == 0) return true;
    if (t.family == Family::D && x == -y && std::abs(x) == n) return true;
    return false;
}

} // namespace detail

inline bool validate_kn(const LieType& t, const Column& col) {
    std::vector<int> alpha = column_alphabet(t);
    for (int x : col)
        if (std::find(alpha.begin(), alpha.end(), x) == alpha.end()) return false;
    for (std::size_t p = 1; p < col.size(); ++p)
        if (!detail::kn_step_ok(t, col[p - 1], col[p])) return false;
    int h = static_cast<int>(col.size());
    for (int a = 0; a < h; ++a) {
        if (col[a] <= 0) continue;
        for (int b = 0; b < h; ++b)
            if (col[b] == -col[a] && (a + 1) + (h - b) > col[a]) return false;
    }
    return true;
}

inline std::vector<Column> enumerate_kn_columns(const LieType& t, int h) {
    std::vector<Column> out;
    if (h < 0) return out;
    std::vector<int> alpha = column_alphabet(t);
    Column col;
    std::function<void()> rec = [&] {
        if (static_cast<int>(col.size()) == h) {
            if (validate_kn(t, col)) out.push_back(col);
            return;
        }
        for (int x : alpha) {
            if (!col.empty() && !detail::kn_step_ok(t, col.back(), x)) continue;
            col.push_back(x);
            rec();
            col.pop_back();
        }
    };
    rec();
    return out;
}

// ------------------------------------------------------------ splitting

struct SplitPair {
    Column left;
    Column right;
    int height = 0;
    bool extended = false;

    bool operator==(const SplitPair&) const = default;
};

struct SplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Type D: read top-down, an n directly followed by n̄ becomes two zeros.
inline Column convert_d_pairs(const Column& col, int n) {
    Column c = col;
    for (std::size_t p = 0; p + 1 < c.size();) {
        if (c[p] == n && c[p + 1] == -n) {
            c[p] = c[p + 1] = 0;
            p += 2;
        } else {
            ++p;
        }
    }
    return c;
}

// Row-by-row split: entry p of the column becomes (left letter, right
// letter).  Rows are in column order, not sorted.
inline std::vector<std::pair<int, int>> split_rows(const LieType& t, const Column& col0) {
    int n = t.rank;
    std::vector<std::pair<int, int>> rows;
    if (t.family == Family::A) {
        for (int x : col0) rows.emplace_back(x, x);
        return rows;
    }
    Column col = t.family == Family::D ? convert_d_pairs(col0, n) : col0;
    std::vector<char> in_col(n + 1, 0), used(n + 1, 0);
    for (int x : col)
        if (x) in_col[std::abs(x)] = 1;

    // z with both z and z̄ present, largest first; t_i is the largest free
    // letter below both t_{i-1} and z_i
    std::vector<int> subs(n + 1, 0);
    int prev = n + 1;
    for (int z = n; z >= 1; --z) {
        bool pos = std::count(col.begin(), col.end(), z), neg = std::count(col.begin(), col.end(), -z);
        if (!pos || !neg) continue;
        int pick = 0;
        for (int c = std::min(prev, z) - 1; c >= 1; --c)
            if (!in_col[c] && !used[c]) { pick = c; break; }
        if (!pick) throw SplitError("column not splittable");
        subs[z] = pick;
        used[pick] = 1;
        prev = pick;
    }
    // zeros take the largest letters still free
    std::vector<int> zero_letters;
    long zeros = std::count(col.begin(), col.end(), 0);
    for (int c = n; c >= 1 && static_cast<long>(zero_letters.size()) < zeros; --c)
        if (!in_col[c] && !used[c]) {
            zero_letters.push_back(c);
            used[c] = 1;
        }
    if (static_cast<long>(zero_letters.size()) < zeros) throw SplitError("column not splittable: too many zeros");

    std::size_t zi = 0;
    for (int x : col) {
        if (x == 0) {
            int u = zero_letters[zi++];
            rows.emplace_back(u, -u);
        } else if (x > 0 && subs[x]) {
            rows.emplace_back(subs[x], x);
        } else if (x < 0 && subs[-x]) {
            rows.emplace_back(x, -subs[-x]);
        } else {
            rows.emplace_back(x, x);
        }
    }
    return rows;
}

inline SplitPair split(const LieType& t, const Column& col) {
    SplitPair sp;
    for (auto [l, r] : split_rows(t, col)) {
        sp.left.push_back(l);
        sp.right.push_back(r);
    }
    sort_letters(sp.left, t.rank);
    sort_letters(sp.right, t.rank);
    sp.height = static_cast<int>(col.size());
    return sp;
}

// Smallest letters a with neither a nor ā used by either column.
inline std::vector<int> extension_letters(const Column& left, const Column& right, int n, int count) {
    std::vector<char> used(n + 1, 0);
    for (int x : left) used[std::abs(x)] = 1;
    for (int x : right) used[std::abs(x)] = 1;
    std::vector<int> out;
    for (int a = 1; a <= n && static_cast<int>(out.size()) < count; ++a)
        if (!used[a]) out.push_back(a);
    if (static_cast<int>(out.size()) < count) throw SplitError("no letters left to extend with");
    return out;
}

inline SplitPair extend(const SplitPair& sp, int k, int n) {
    if (k < sp.height) throw std::invalid_argument("extension target below column height");
    SplitPair out = sp;
    for (int a : extension_letters(sp.left, sp.right, n, k - sp.height)) {
        out.left.push_back(-a);
        out.right.push_back(a);
    }
    sort_letters(out.left, n);
    sort_letters(out.right, n);
    out.height = k;
    out.extended = true;
    return out;
}

// --------------------------------------------------------- KR and tensors

struct KRElement {
    Column column;   // the KN column
    SplitPair pair;  // split (and in B/D extended) form
};

// A and C: B(ω_r) alone.  B and D: B(ω_r) ⊔ B(ω_{r-2}) ⊔ ..., every
// column split and extended to height r.
inline std::vector<KRElement> enumerate_KR(const LieType& t, int r) {
    std::vector<KRElement> out;
    bool tower = t.family == Family::B || t.family == Family::D;
    for (int h = r; h >= 0; h -= 2) {
        for (const Column& c : enumerate_kn_columns(t, h)) {
            SplitPair sp = split(t, c);
            if (tower) sp = extend(sp, r, t.rank);
            out.push_back({c, sp});
        }
        if (!tower) break;
    }
    return out;
}

struct TensorElement {
    std::vector<Column> kn;        // one KN column per λ' part
    std::vector<Column> filling;   // C_1 C_2 ... (type A) or lC_1 rC_1 lC_2 rC_2 ...
};

inline std::vector<Column> tensor_filling(const LieType& t, const std::vector<KRElement>& parts) {
    std::vector<Column> f;
    for (const KRElement& e : parts) {
        f.push_back(e.pair.left);
        if (t.family != Family::A) f.push_back(e.pair.right);
    }
    return f;
}

// Cartesian product over the columns of λ, first column varying slowest.
inline std::vector<TensorElement> enumerate_tensor(const LieType& t, const std::vector<int>& heights) {
    std::vector<std::vector<KRElement>> factors;
    for (int k : heights) factors.push_back(enumerate_KR(t, k));
    std::vector<TensorElement> out;
    std::vector<KRElement> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == factors.size()) {
            TensorElement e;
            for (const KRElement& x : cur) e.kn.push_back(x.column);
            e.filling = tensor_filling(t, cur);
            out.push_back(std::move(e));
            return;
        }
        for (const KRElement& x : factors[c]) {
            cur.push_back(x);
            rec(c + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// ------------------------------------------------------------- matchings

struct MatchedPair {
    Column left;
    Column right;   // row p of right is matched with row p of left

    bool operator==(const MatchedPair&) const = default;
};

// Left column sorted; each row carries its split partner (self, t_i/z_i,
// zero letter u/ū, or extension ā/a).
inline MatchedPair initial_matching(const LieType& t, const Column& col, int k) {
    int n = t.rank;
    auto rows = split_rows(t, col);
    Column l, r;
    for (auto [a, b] : rows) {
        l.push_back(a);
        r.push_back(b);
    }
    int extra = k - static_cast<int>(rows.size());
    if (extra < 0) throw std::invalid_argument("matching height below column height");
    for (int a : extension_letters(l, r, n, extra)) rows.emplace_back(-a, a);
    std::stable_sort(rows.begin(), rows.end(), [n](auto x, auto y) { return letter_less(x.first, y.first, n); });
    MatchedPair m;
    for (auto [a, b] : rows) {
        m.left.push_back(a);
        m.right.push_back(b);
    }
    return m;
}

// Row by row, seat the right entry that comes first clockwise from the
// left entry of that row.
inline MatchedPair corrected_matching(const LieType& t, const MatchedPair& mp) {
    MatchedPair m = mp;
    int k = static_cast<int>(m.left.size());
    for (int i = 0; i + 1 < k; ++i) {
        int best = i;
        for (int l = i + 1; l < k; ++l)
            if (circ_rank(t.family, t.rank, m.left[i], m.right[l]) < circ_rank(t.family, t.rank, m.left[i], m.right[best]))
                best = l;
        std::swap(m.right[i], m.right[best]);
    }
    return m;
}

// Permute rows by sigma (row p takes old row sigma[p]), then reseat the
// right column as above while refusing blocked-off prefixes.
inline MatchedPair reordered_matching(const LieType& t, const MatchedPair& mp, const std::vector<int>& sigma) {
    int k = static_cast<int>(mp.left.size());
    if (static_cast<int>(sigma.size()) != k) throw std::invalid_argument("sigma has the wrong size");
    MatchedPair m;
    for (int p = 0; p < k; ++p) {
        m.left.push_back(mp.left[sigma[p]]);
        m.right.push_back(mp.right[sigma[p]]);
    }
    for (int i = 0; i + 1 < k; ++i) {
        int best = -1;
        for (int l = i; l < k; ++l) {
            Column trial = m.right;
            std::swap(trial[i], trial[l]);
            if (blocked_off(t, m.left, trial, i + 1)) continue;
            if (best < 0 || circ_rank(t.family, t.rank, m.left[i], m.right[l]) <
                                circ_rank(t.family, t.rank, m.left[i], m.right[best]))
                best = l;
        }
        if (best < 0) throw std::runtime_error("reordered matching: every choice is blocked off");
        std::swap(m.right[i], m.right[best]);
    }
    return m;
}

// Necessary conditions on a pair of adjacent columns (rows 1-based):
// C(i) ≠ C'(l) for i < l; C(i) ≺ C'(l) ≺ C'(i) only when C, C't_il are
// blocked off at i; and no blocked-off prefix above the last row.
inline bool adjacent_conditions(const LieType& t, const Column& c, const Column& cp) {
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i)
        for (int l = i + 1; l < k; ++l) {
            if (c[i] == cp[l]) return false;
            if (circ_between(t.family, t.rank, c[i], cp[l], cp[i])) {
                Column sw = cp;
                std::swap(sw[i], sw[l]);
                if (!blocked_off(t, c, sw, i + 1)) return false;
            }
        }
    for (int i = 1; i < k; ++i)
        if (blocked_off(t, c, cp, i)) return false;
    return true;
}

struct ConditionReport {
    bool abs_multiset = true;   // 1
    bool empty_interval = true; // 2
    bool sign_monotone = true;  // 3
    bool adjacent = true;       // 4

    bool all() const { return abs_multiset && empty_interval && sign_monotone && adjacent; }
    bool first_three() const { return abs_multiset && empty_interval && sign_monotone; }
};

inline ConditionReport evaluate_conditions(const LieType& t, const MatchedPair& m) {
    ConditionReport rep;
    int n = t.rank;
    const Column& c = m.left;
    const Column& cp = m.right;
    int k = static_cast<int>(c.size());
    if (static_cast<int>(cp.size()) != k) return {false, false, false, false};

    std::multiset<int> a, b;
    for (int x : c) a.insert(std::abs(x));
    for (int x : cp) b.insert(std::abs(x));
    rep.abs_multiset = a == b;

    std::vector<char> in_c(n + 1, 0);
    for (int x : c) in_c[std::abs(x)] = 1;
    for (int i = 0; i < k && rep.empty_interval; ++i)
        for (int x = -n; x <= n; ++x) {
            if (!x || in_c[std::abs(x)]) continue;
            if (circ_between(t.family, n, c[i], x, cp[i])) {
                rep.empty_interval = false;
                break;
            }
        }

    int minus_plus = 0;
    for (int i = 0; i < k; ++i) {
        if ((c[i] > 0) == (cp[i] > 0) && c[i] != cp[i] && !letter_less(c[i], cp[i], n)) rep.sign_monotone = false;
        if (c[i] < 0 && cp[i] > 0) ++minus_plus;
    }
    if (minus_plus % 2) rep.sign_monotone = false;

    rep.adjacent = adjacent_conditions(t, c, cp);
    return rep;
}

inline bool check_conditions_SER(const LieType& t, const MatchedPair& m) { return evaluate_conditions(t, m).all(); }

} // namespace krm
