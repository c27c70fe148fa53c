#pragma once

// Quantum Bruhat graph: edge tests from lengths and from the circular-order
// criteria, full graph builds and DOT export.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weyl.hpp"

namespace krm {

enum class EdgeKind { Cover, Quantum };

inline const char* edge_kind_name(EdgeKind k) { return k == EdgeKind::Cover ? "cover" : "quantum"; }

inline std::optional<EdgeKind> edge_kind(const LieType& t, const Window& w, const Root& r) {
    int lw = length(w, t);
    int lv = length(apply_reflection(w, r), t);
    if (lv == lw + 1) return EdgeKind::Cover;
    if (lv == lw - 2 * rho_pairing(r, t) + 1) return EdgeKind::Quantum;
    return std::nullopt;
}

inline bool edge_exists(const LieType& t, const Window& w, const Root& r) {
    return edge_kind(t, w, r).has_value();
}

namespace detail {

// signed positions strictly between p and q in the order 1..n, n̄..1̄
inline std::vector<int> positions_between(int n, int p, int q) {
    auto idx = [n](int z) { return z > 0 ? z - 1 : 2 * n + z; };
    std::vector<int> out;
    for (int s = idx(p) + 1; s < idx(q); ++s) out.push_back(s < n ? s + 1 : s - 2 * n);
    return out;
}

} // namespace detail

// Circular-order criteria for types A, B, C.  Type D has none.
inline bool edge_exists_by_criterion(const LieType& t, const Window& w, const Root& r0) {
    Family f = t.family;
    if (f == Family::D) throw std::invalid_argument("no circular-order criterion for type D");
    int n = t.rank;
    Root r = r0.normalized();
    int i = r.i;
    int wi = w[i - 1];
    auto blocked_by = [&](const std::vector<int>& ks, int target) {
        for (int k : ks)
            if (circ_between(f, n, wi, value_at(w, k), target)) return true;
        return false;
    };

    if (r.kind == RootKind::Delta) {
        std::vector<int> ks;
        for (int k = i + 1; k < r.j; ++k) ks.push_back(k);
        return !blocked_by(ks, w[r.j - 1]);
    }

    if (f == Family::A) throw std::invalid_argument("root not in type A: " + root_string(r0));
    int q = r.kind == RootKind::Sigma ? -r.j : -i;
    int wq = value_at(w, q);
    std::vector<int> ks = detail::positions_between(n, i, q);

    if (r.kind == RootKind::Sigma) {
        bool same_sign = (wi > 0) == (wq > 0);
        if (f == Family::C) return letter_less(wi, wq, n) && same_sign && !blocked_by(ks, wq);
        // type B: monotone same-sign case uses the plain order
        bool a = letter_less(wi, wq, n) && same_sign;
        for (int k : ks) {
            int x = value_at(w, k);
            if (letter_less(wi, x, n) && letter_less(x, wq, n)) a = false;
        }
        std::vector<int> ks2;
        for (int k : ks)
            if (k != r.j) ks2.push_back(k);
        bool b = wi < 0 && wq > 0 && !blocked_by(ks2, wq);
        return a || b;
    }

    if (f == Family::C) return !blocked_by(ks, wq);
    bool a = letter_less(wi, wq, n) && !blocked_by(ks, wq);
    bool b = letter_less(wq, wi, n) && i == n;
    return a || b;
}

struct QbgEdge {
    Window source;
    Window target;
    Root label;
    EdgeKind kind;
};

struct Qbg {
    LieType type;
    std::vector<Window> vertices;
    std::vector<QbgEdge> edges;
    std::map<Window, std::vector<std::size_t>> out;   // vertex -> edge indices

    bool has_edge(const Window& w, const Root& r) const {
        auto it = out.find(w);
        if (it == out.end()) return false;
        for (std::size_t e : it->second)
            if (edges[e].label.same_root(r)) return true;
        return false;
    }
};

inline constexpr std::size_t kMaxGroupOrder = 1000000;

inline std::size_t group_order(const LieType& t) {
    std::size_t o = 1;
    for (int i = 2; i <= t.rank; ++i) o *= i;
    if (t.family == Family::A) return o;
    o <<= t.rank;
    return t.family == Family::D ? o / 2 : o;
}

inline Qbg build_qbg(const LieType& t) {
    if (t.rank > 10 || group_order(t) > kMaxGroupOrder) throw std::length_error("group too large for a full graph build");
    Qbg g;
    g.type = t;
    g.vertices = all_elements(t);
    std::map<Window, int> len;
    for (const Window& w : g.vertices) len[w] = length(w, t);
    std::vector<Root> roots = positive_roots(t);
    for (const Window& w : g.vertices) {
        auto& slots = g.out[w];
        for (const Root& r : roots) {
            Window v = apply_reflection(w, r);
            int lw = len[w], lv = len.at(v);
            std::optional<EdgeKind> k;
            if (lv == lw + 1) k = EdgeKind::Cover;
            else if (lv == lw - 2 * rho_pairing(r, t) + 1) k = EdgeKind::Quantum;
            if (!k) continue;
            slots.push_back(g.edges.size());
            g.edges.push_back({w, v, r, *k});
        }
    }
    return g;
}

// Compact vertex name: "231", "-31-2"; comma separated once n > 9.
inline std::string vertex_name(const Window& w) {
    std::string s;
    bool wide = w.size() > 9;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (wide && p) s += ',';
        s += std::to_string(w[p]);
    }
    return s;
}

inline std::string export_dot(const Qbg& g) {
    std::ostringstream os;
    os << "digraph qbg {\n";
    os << "  // " << family_char(g.type.family) << " rank " << g.type.rank << ", " << g.vertices.size()
       << " vertices, " << g.edges.size() << " edges\n";
    for (const Window& w : g.vertices) os << "  \"" << vertex_name(w) << "\";\n";
    for (const QbgEdge& e : g.edges) {
        os << "  \"" << vertex_name(e.source) << "\" -> \"" << vertex_name(e.target) << "\" [label=\""
           << root_string(e.label) << "\"";
        if (e.kind == EdgeKind::Quantum) os << ", style=dashed";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace krm
