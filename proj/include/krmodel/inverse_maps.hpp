#pragma once

// Inverse of sfill: reorder the columns, then walk the chain row by row
// choosing roots greedily toward each target column.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alcove.hpp"
#include "blocked_off.hpp"
#include "kn_columns.hpp"
#include "weyl.hpp"

namespace krm {

// Each column after the first is reseated row by row: take the remaining
// entry that comes first clockwise from the previous column's entry, but
// (types B, D) never one that makes the two prefixes blocked off, except
// in the last row.
inline std::vector<Column> reorder(const LieType& t, const std::vector<Column>& filling) {
    std::vector<Column> out;
    if (filling.empty()) return out;
    out.push_back(filling.front());
    for (std::size_t c = 1; c < filling.size(); ++c) {
        const Column& prev = out.back();
        Column rem = filling[c];
        Column next;
        int h = static_cast<int>(rem.size());
        if (static_cast<int>(prev.size()) < h) throw std::invalid_argument("column heights must weakly decrease");
        for (int j = 0; j < h; ++j) {
            int base = prev[j];
            std::vector<int> order = rem;
            std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
                return circ_rank(t.family, t.rank, base, x) < circ_rank(t.family, t.rank, base, y);
            });
            std::optional<int> pick;
            for (int x : order) {
                if (j < h - 1) {
                    Column trial = next;
                    trial.push_back(x);
                    if (blocked_off(t, prev, trial, j + 1)) continue;
                }
                pick = x;
                break;
            }
            if (!pick) throw std::runtime_error("reorder: no admissible entry");
            next.push_back(*pick);
            rem.erase(std::find(rem.begin(), rem.end(), *pick));
        }
        out.push_back(next);
    }
    return out;
}

struct PathStep {
    Root root;
    Window word;   // after the step
    Stage stage;
};

struct PathTrace {
    Side side = Side::Left;
    int row = 0;
    int height = 0;
    int target = 0;
    Window start;
    Window end;
    std::vector<PathStep> steps;
    std::vector<PathStep> skips;     // greedy candidates refused for block-off
    bool passed_target = false;      // the (k,k+1) step was taken
    std::optional<int> max_stage1;   // M_I
    std::optional<int> max_stage3;   // M_III
    std::vector<int> stage_values;   // row value after stages I, II, III, IV

    bool reached() const { return end[row - 1] == target; }
};

namespace detail {

// circular maximum from base over the candidates in (base, c]
inline int circ_max(const LieType& t, int base, int c, const std::vector<int>& cands) {
    int best = base;
    for (int x : cands)
        if (circ_upto(t.family, t.rank, base, x, c) &&
            circ_rank(t.family, t.rank, base, x) > circ_rank(t.family, t.rank, base, best))
            best = x;
    return best;
}

} // namespace detail

// One row i of a left half (or of a type-A column) of height k.
inline PathTrace path_segment(const LieType& t, const Window& u0, int i, const Column& target, int k) {
    int n = t.rank;
    Family f = t.family;
    PathTrace tr;
    tr.side = f == Family::A ? Side::Whole : Side::Left;
    tr.row = i;
    tr.height = k;
    tr.target = target[i - 1];
    tr.start = u0;
    Window u = u0;
    int c = tr.target;
    auto take = [&](const Root& r, Stage s) {
        u = apply_reflection(u, r);
        tr.steps.push_back({r, u, s});
    };
    auto prefix = [](const Window& w, int len) { return Column(w.begin(), w.begin() + len); };
    Column tprefix(target.begin(), target.begin() + i);

    if (u[i - 1] == c) {
        tr.end = u;
        return tr;
    }
    std::vector<int> rest;
    for (int m = k + 1; m <= n; ++m) rest.push_back(m);
    if ((f == Family::B || f == Family::D) && i == k && k < n && blocked_off(t, prefix(u, k), target, k)) {
        take(Root::delta(k, k + 1), Stage::I);
        tr.passed_target = true;
        rest.erase(rest.begin());
    }

    // M_I ranges over the stage-I positions still available after a pass
    std::vector<int> outer, outer_pm;
    for (int m : rest) outer.push_back(u[m - 1]);
    for (int m = k + 1; m <= n; ++m) {
        outer_pm.push_back(u[m - 1]);
        outer_pm.push_back(-u[m - 1]);
    }
    tr.max_stage1 = detail::circ_max(t, u[i - 1], c, outer);
    if (f != Family::A) {
        outer_pm.push_back(-u[i - 1]);
        tr.max_stage3 = detail::circ_max(t, u[i - 1], c, outer_pm);
    }

    for (int m : rest) {
        if (!circ_upto(f, n, u[i - 1], u[m - 1], c)) continue;
        Root r = Root::delta(i, m);
        Window v = apply_reflection(u, r);
        if (blocked_off(t, prefix(v, i), tprefix, i)) {
            tr.skips.push_back({r, v, Stage::I});
            continue;
        }
        take(r, Stage::I);
    }
    tr.stage_values.push_back(u[i - 1]);
    if (f == Family::A) {
        tr.end = u;
        return tr;
    }

    if (f != Family::D) {
        int x = u[i - 1];
        if (circ_upto(f, n, x, -x, c) && (f == Family::C || x > 0)) take(Root::diag(i), Stage::II);
    }
    tr.stage_values.push_back(u[i - 1]);
    for (int m = n; m > k; --m)
        if (circ_upto(f, n, u[i - 1], -u[m - 1], c)) take(Root::sigma(i, m), Stage::III);
    tr.stage_values.push_back(u[i - 1]);
    for (int m = i - 1; m >= 1; --m)
        if (circ_upto(f, n, u[i - 1], -u[m - 1], c)) take(Root::sigma(i, m), Stage::IV);
    tr.stage_values.push_back(u[i - 1]);
    tr.end = u;
    return tr;
}

// One row i of a right half.  Type B may first apply (i,ī) by the left
// stage-II rule; then stage-IV roots, refusing blocked-off prefixes.
inline PathTrace path_right_segment(const LieType& t, const Window& u0, int i, const Column& target, int k) {
    int n = t.rank;
    Family f = t.family;
    PathTrace tr;
    tr.side = Side::Right;
    tr.row = i;
    tr.height = k;
    tr.target = target[i - 1];
    tr.start = u0;
    Window u = u0;
    int c = tr.target;
    Column tprefix(target.begin(), target.begin() + i);
    if (f == Family::B) {
        int x = u[i - 1];
        if (x != c && x > 0 && circ_upto(f, n, x, -x, c)) {
            u = apply_reflection(u, Root::diag(i));
            tr.steps.push_back({Root::diag(i), u, Stage::II});
        }
    }
    for (int m = i - 1; m >= 1; --m) {
        if (u[i - 1] == c || !circ_upto(f, n, u[i - 1], -u[m - 1], c)) continue;
        Root r = Root::sigma(i, m);
        Window v = apply_reflection(u, r);
        if (blocked_off(t, Column(v.begin(), v.begin() + i), tprefix, i)) {
            tr.skips.push_back({r, v, Stage::IV});
            continue;
        }
        u = v;
        tr.steps.push_back({r, u, Stage::IV});
    }
    tr.end = u;
    return tr;
}

struct PathResult {
    bool ok = false;
    std::vector<int> J;
    std::string error;
    std::vector<PathTrace> traces;
};

// Runs the row procedures over every segment of the chain toward the
// given (already reordered) columns and reads off chain positions.
inline PathResult path(const LambdaChain& ch, const std::vector<Column>& reordered, bool keep_traces = true) {
    const LieType& t = ch.type;
    PathResult res;
    if (reordered.size() != ch.segments.size()) {
        res.error = "filling does not match the chain shape";
        return res;
    }
    Window u = identity_window(t.rank);
    for (std::size_t s = 0; s < ch.segments.size(); ++s) {
        const Segment& seg = ch.segments[s];
        const Column& target = reordered[s];
        int k = seg.height;
        if (static_cast<int>(target.size()) != k) {
            res.error = "column height mismatch";
            return res;
        }
        for (int i = k; i >= 1; --i) {
            if (seg.side == Side::Right && t.family != Family::B && i == 1) break;
            PathTrace tr = seg.side == Side::Right ? path_right_segment(t, u, i, target, k)
                                                   : path_segment(t, u, i, target, k);
            // chain positions of this row, matched as a subsequence
            std::size_t q = seg.begin;
            for (const PathStep& st : tr.steps) {
                while (q < seg.end && !(ch.positions[q].row == i && ch.positions[q].root == st.root)) ++q;
                if (q == seg.end) {
                    res.error = "path root " + root_string(st.root) + " not in chain segment";
                    return res;
                }
                res.J.push_back(static_cast<int>(q) + 1);
                ++q;
            }
            u = tr.end;
            if (keep_traces) res.traces.push_back(std::move(tr));
        }
        if (!std::equal(target.begin(), target.end(), u.begin())) {
            res.error = "no path";
            return res;
        }
    }
    res.ok = true;
    return res;
}

inline PathResult invert(const LambdaChain& ch, const std::vector<Column>& filling, bool keep_traces = true) {
    std::vector<Column> ord;
    try {
        ord = reorder(ch.type, filling);
    } catch (const std::exception& e) {
        PathResult r;
        r.error = e.what();
        return r;
    }
    return path(ch, ord, keep_traces);
}

// Raw KN columns (one per part of λ') to the split, extended filling.
inline std::vector<Column> split_filling(const LieType& t, const std::vector<int>& heights, const std::vector<Column>& kn) {
    if (kn.size() != heights.size()) throw std::invalid_argument("need one KN column per column of λ");
    std::vector<Column> f;
    for (std::size_t c = 0; c < kn.size(); ++c) {
        if (!validate_kn(t, kn[c])) throw std::invalid_argument("not a KN column");
        if (t.family == Family::A) {
            f.push_back(kn[c]);
            continue;
        }
        SplitPair sp = split(t, kn[c]);
        if (t.family == Family::B || t.family == Family::D) sp = extend(sp, heights[c], t.rank);
        else if (sp.height != heights[c]) throw std::invalid_argument("column height mismatch");
        f.push_back(sp.left);
        f.push_back(sp.right);
    }
    return f;
}

} // namespace krm
