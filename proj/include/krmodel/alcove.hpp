#pragma once

// ω_k-chains, λ-chains, folding subsets and admissible-subset enumeration.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qbg.hpp"
#include "weyl.hpp"

namespace krm {

enum class Side { Whole, Left, Right };
enum class Stage { I, II, III, IV };

inline const char* side_name(Side s) {
    switch (s) {
    case Side::Whole: return "whole";
    case Side::Left: return "left";
    case Side::Right: return "right";
    }
    return "?";
}

inline const char* stage_name(Stage s) {
    switch (s) {
    case Stage::I: return "I";
    case Stage::II: return "II";
    case Stage::III: return "III";
    case Stage::IV: return "IV";
    }
    return "?";
}

struct ChainPosition {
    Root root;
    int column = 0;     // 0-based index into the conjugate partition
    Side side = Side::Whole;
    Stage stage = Stage::I;
    int row = 0;        // the i of the segment the root belongs to
};

// Left half for B/C/D, whole column for A.  Per row i = k..1: stage I
// (i,k+1..n), stage II (i,ī), stage III (i,n̄..(k+1)bar), stage IV
// (i,(i-1)bar..1̄).  Type A keeps stage I only, type D drops stage II.
inline std::vector<ChainPosition> omega_chain_left(const LieType& t, int k) {
    int n = t.rank;
    int top = t.family == Family::A ? n - 1 : n;
    if (k < 1 || k > top) throw std::out_of_range("column height out of range: " + std::to_string(k));
    Side side = t.family == Family::A ? Side::Whole : Side::Left;
    std::vector<ChainPosition> out;
    for (int i = k; i >= 1; --i) {
        for (int m = k + 1; m <= n; ++m) out.push_back({Root::delta(i, m), 0, side, Stage::I, i});
        if (t.family == Family::A) continue;
        if (t.family != Family::D) out.push_back({Root::diag(i), 0, side, Stage::II, i});
        for (int m = n; m > k; --m) out.push_back({Root::sigma(i, m), 0, side, Stage::III, i});
        for (int m = i - 1; m >= 1; --m) out.push_back({Root::sigma(i, m), 0, side, Stage::IV, i});
    }
    return out;
}

// Right half.  Types C and D: rows k..2 with (i,(i-1)bar..1̄).  Type B puts
// (i,ī) in front of each row, rows k..1, since ε_i has coroot 2ε_i there.
inline std::vector<ChainPosition> omega_chain_right(const LieType& t, int k) {
    if (t.family == Family::A) return {};
    if (k < 1 || k > t.rank) throw std::out_of_range("column height out of range: " + std::to_string(k));
    std::vector<ChainPosition> out;
    for (int i = k; i >= 1; --i) {
        if (t.family == Family::B) out.push_back({Root::diag(i), 0, Side::Right, Stage::II, i});
        for (int m = i - 1; m >= 1; --m) out.push_back({Root::sigma(i, m), 0, Side::Right, Stage::IV, i});
    }
    return out;
}

inline std::vector<ChainPosition> omega_chain(const LieType& t, int k) {
    auto out = omega_chain_left(t, k);
    auto r = omega_chain_right(t, k);
    out.insert(out.end(), r.begin(), r.end());
    return out;
}

inline std::vector<int> conjugate(const std::vector<int>& lambda) {
    std::vector<int> out;
    int first = lambda.empty() ? 0 : lambda.front();
    for (int c = 0; c < first; ++c) {
        int h = 0;
        for (int p : lambda)
            if (p > c) ++h;
        out.push_back(h);
    }
    return out;
}

inline bool is_partition(const std::vector<int>& lambda) {
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) return false;
        if (i && lambda[i] > lambda[i - 1]) return false;
    }
    return true;
}

inline std::vector<int> trim_partition(std::vector<int> lambda) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

struct Segment {
    int column = 0;
    int height = 0;
    Side side = Side::Whole;
    std::size_t begin = 0;   // [begin, end) into positions
    std::size_t end = 0;
};

struct LambdaChain {
    LieType type;
    std::vector<int> lambda;
    std::vector<int> heights;            // conjugate partition
    std::vector<ChainPosition> positions;
    std::vector<Segment> segments;       // L,R per column (one per column in type A)

    std::size_t size() const { return positions.size(); }
};

inline LambdaChain lambda_chain(const LieType& t, const std::vector<int>& lambda0) {
    std::vector<int> lambda = trim_partition(lambda0);
    if (!is_partition(lambda)) throw std::invalid_argument("not a partition");
    LambdaChain ch;
    ch.type = t;
    ch.lambda = lambda;
    ch.heights = conjugate(lambda);
    for (int c = 0; c < static_cast<int>(ch.heights.size()); ++c) {
        int k = ch.heights[c];
        auto add = [&](std::vector<ChainPosition> seg, Side side) {
            Segment s{c, k, side, ch.positions.size(), 0};
            for (auto& p : seg) {
                p.column = c;
                ch.positions.push_back(p);
            }
            s.end = ch.positions.size();
            ch.segments.push_back(s);
        };
        if (t.family == Family::A) {
            add(omega_chain_left(t, k), Side::Whole);
        } else {
            add(omega_chain_left(t, k), Side::Left);
            add(omega_chain_right(t, k), Side::Right);
        }
    }
    return ch;
}

// ------------------------------------------------------------- folding

// J holds 1-based chain positions, strictly increasing.
inline void check_subset(const LambdaChain& ch, const std::vector<int>& J) {
    for (std::size_t a = 0; a < J.size(); ++a) {
        if (J[a] < 1 || J[a] > static_cast<int>(ch.size())) throw std::out_of_range("position outside the chain");
        if (a && J[a] <= J[a - 1]) throw std::invalid_argument("positions must be strictly increasing");
    }
}

inline bool is_admissible(const LambdaChain& ch, const std::vector<int>& J) {
    check_subset(ch, J);
    Window w = identity_window(ch.type.rank);
    for (int p : J) {
        const Root& r = ch.positions[p - 1].root;
        if (!edge_exists(ch.type, w, r)) return false;
        w = apply_reflection(w, r);
    }
    return true;
}

inline constexpr std::size_t kMaxChainLength = 64;

// Depth-first over positions: skip, or fold when the QBG edge exists.
// Output is sorted lexicographically.
inline std::vector<std::vector<int>> enumerate_admissible(const LambdaChain& ch, std::size_t max_results = 50000000) {
    if (ch.size() > kMaxChainLength) throw std::length_error("chain too long for enumeration");
    std::vector<std::vector<int>> out;
    std::vector<int> J;
    std::function<void(std::size_t, const Window&)> dfs = [&](std::size_t p, const Window& w) {
        if (p == ch.size()) {
            if (out.size() >= max_results) throw std::length_error("admissible subset guard exceeded");
            out.push_back(J);
            return;
        }
        dfs(p + 1, w);
        const Root& r = ch.positions[p].root;
        if (edge_exists(ch.type, w, r)) {
            J.push_back(static_cast<int>(p) + 1);
            dfs(p + 1, apply_reflection(w, r));
            J.pop_back();
        }
    };
    dfs(0, identity_window(ch.type.rank));
    std::sort(out.begin(), out.end());
    return out;
}

struct Folded {
    std::vector<std::vector<int>> gamma;   // γ_k for every chain position
    std::vector<int> positive;             // J⁺
    std::vector<int> negative;             // J⁻
};

// γ_k = r_{j1}…r_{jp}(β_k) with j_p the last folding position before k.
// The product of the reflections is the prefix product of T, applied as a
// signed permutation.
inline Folded fold(const LambdaChain& ch, const std::vector<int>& J) {
    check_subset(ch, J);
    Folded f;
    Window w = identity_window(ch.type.rank);
    std::size_t next = 0;
    for (std::size_t p = 0; p < ch.size(); ++p) {
        const Root& r = ch.positions[p].root;
        std::vector<int> g = act(w, root_vector(ch.type, r));
        f.gamma.push_back(g);
        if (next < J.size() && J[next] == static_cast<int>(p) + 1) {
            (is_positive_vector(g) ? f.positive : f.negative).push_back(J[next]);
            w = apply_reflection(w, r);
            ++next;
        }
    }
    return f;
}

} // namespace krm
