#pragma once

// Letters, signed permutations, roots and reflections for the classical
// families.  A letter is a signed int: -x is the barred letter, 0 is the
// type-B zero.  For type A the rank is the window size n (the group S_n).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace krm {

enum class Family { A, B, C, D };

struct LieType {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const LieType&) const = default;
};

using Window = std::vector<int>;
using Column = std::vector<int>;

inline char family_char(Family f) {
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

inline Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("unknown family: " + s);
}

inline bool signed_family(Family f) { return f != Family::A; }

// ---------------------------------------------------------------- letters

// Position in the total order 1 < ... < n < 0 < n̄ < ... < 1̄.
inline int letter_key(int x, int n) {
    if (x > 0) return 2 * x;
    if (x == 0) return 2 * n + 1;
    return 2 * (2 * n + 1 + x);
}

inline bool letter_less(int x, int y, int n) { return letter_key(x, n) < letter_key(y, n); }

inline void sort_letters(Column& c, int n) {
    std::sort(c.begin(), c.end(), [n](int x, int y) { return letter_less(x, y, n); });
}

inline Column sorted_column(Column c, int n) {
    sort_letters(c, n);
    return c;
}

// Steps from base to x going clockwise; 0 iff x == base.  The alphabet is
// [n] for type A and the 2n signed letters otherwise (0 never occurs here).
inline int circ_rank(Family f, int n, int base, int x) {
    if (f == Family::A) return ((x - base) % n + n) % n;
    auto pos = [n](int z) { return z > 0 ? z - 1 : 2 * n + z; };
    int m = 2 * n;
    return ((pos(x) - pos(base)) % m + m) % m;
}

// a ≺ x ≺ c in the order based at a
inline bool circ_between(Family f, int n, int a, int x, int c) {
    int rx = circ_rank(f, n, a, x);
    return rx > 0 && rx < circ_rank(f, n, a, c);
}

// a ≺ x ⪯ c
inline bool circ_upto(Family f, int n, int a, int x, int c) {
    int rx = circ_rank(f, n, a, x);
    return rx > 0 && rx <= circ_rank(f, n, a, c);
}

// ------------------------------------------------------------ permutations

inline Window identity_window(int n) {
    Window w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return w;
}

// w(p) for a signed position p, using w(p̄) = bar(w(p))
inline int value_at(const Window& w, int p) { return p > 0 ? w[p - 1] : -w[-p - 1]; }

inline bool is_signed_permutation(const Window& w) {
    int n = static_cast<int>(w.size());
    std::vector<char> seen(n + 1, 0);
    for (int x : w) {
        int a = std::abs(x);
        if (a < 1 || a > n || seen[a]) return false;
        seen[a] = 1;
    }
    return true;
}

inline bool is_even_signed(const Window& w) {
    return std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }) % 2 == 0;
}

inline bool valid_window(const LieType& t, const Window& w) {
    if (static_cast<int>(w.size()) != t.rank || !is_signed_permutation(w)) return false;
    if (t.family == Family::A) return std::all_of(w.begin(), w.end(), [](int x) { return x > 0; });
    return true;
}

// Every element of the Weyl group, in lexicographic order of the
// underlying permutation then of the sign pattern.
inline std::vector<Window> all_elements(const LieType& t) {
    int n = t.rank;
    std::vector<Window> out;
    Window p = identity_window(n);
    do {
        if (t.family == Family::A) {
            out.push_back(p);
            continue;
        }
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Window w = p;
            for (int i = 0; i < n; ++i)
                if (mask >> (n - 1 - i) & 1u) w[i] = -w[i];
            if (t.family == Family::D && !is_even_signed(w)) continue;
            out.push_back(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// ---------------------------------------------------------------- roots

enum class RootKind { Delta, Sigma, Diag };

// A root as written in a chain: (i,j), (i,j̄) or (i,ī).  For Sigma the
// written order is kept, so (2,1̄) and (1,2̄) are the same root.
struct Root {
    RootKind kind = RootKind::Delta;
    int i = 1;
    int j = 2;

    static Root delta(int i, int j) { return {RootKind::Delta, i, j}; }
    static Root sigma(int i, int j) { return {RootKind::Sigma, i, j}; }
    static Root diag(int i) { return {RootKind::Diag, i, i}; }

    // second index as a signed position: j, j̄ or ī
    int signed_second() const { return kind == RootKind::Delta ? j : -j; }

    Root normalized() const {
        if (kind == RootKind::Diag || i <= j) return *this;
        return {kind, j, i};
    }

    bool same_root(const Root& o) const {
        Root a = normalized(), b = o.normalized();
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }

    bool operator==(const Root&) const = default;
};

inline std::string root_string(const Root& r) {
    return "(" + std::to_string(r.i) + "," + std::to_string(r.signed_second()) + ")";
}

// Parses "(i,j)", "(i,-j)" or "(i,-i)".
inline Root parse_root(const std::string& s) {
    int i = 0, m = 0;
    if (std::sscanf(s.c_str(), " (%d,%d)", &i, &m) != 2 || i <= 0 || m == 0)
        throw std::invalid_argument("bad root: " + s);
    if (m > 0) return Root::delta(i, m);
    if (-m == i) return Root::diag(i);
    return Root::sigma(i, -m);
}

inline bool root_in_type(const LieType& t, const Root& r) {
    int n = t.rank;
    if (r.i < 1 || r.i > n || r.j < 1 || r.j > n) return false;
    switch (r.kind) {
    case RootKind::Delta: return r.i != r.j;
    case RootKind::Sigma: return r.i != r.j && signed_family(t.family);
    case RootKind::Diag: return t.family == Family::B || t.family == Family::C;
    }
    return false;
}

inline std::vector<Root> positive_roots(const LieType& t) {
    int n = t.rank;
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Root::delta(i, j));
    if (!signed_family(t.family)) return out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Root::sigma(i, j));
    if (t.family != Family::D)
        for (int i = 1; i <= n; ++i) out.push_back(Root::diag(i));
    return out;
}

// Coordinates in the ε basis; Diag is ε_i in type B and 2ε_i in type C.
inline std::vector<int> root_vector(const LieType& t, const Root& r) {
    std::vector<int> v(t.rank, 0);
    switch (r.kind) {
    case RootKind::Delta: v[r.i - 1] += 1; v[r.j - 1] -= 1; break;
    case RootKind::Sigma: v[r.i - 1] += 1; v[r.j - 1] += 1; break;
    case RootKind::Diag: v[r.i - 1] = t.family == Family::C ? 2 : 1; break;
    }
    return v;
}

// w · s_r, acting on positions
inline Window apply_reflection(const Window& w, const Root& r) {
    int n = static_cast<int>(w.size());
    if (r.i < 1 || r.i > n || r.j < 1 || r.j > n) throw std::out_of_range("root index out of range: " + root_string(r));
    Window v = w;
    int a = r.i - 1, b = r.j - 1;
    switch (r.kind) {
    case RootKind::Delta: std::swap(v[a], v[b]); break;
    case RootKind::Sigma:
        if (a == b) throw std::out_of_range("sigma root needs distinct indices");
        v[a] = -w[b];
        v[b] = -w[a];
        break;
    case RootKind::Diag: v[a] = -w[a]; break;
    }
    return v;
}

// image of a vector under w, with ε_p -> sign(w(p)) ε_|w(p)|
inline std::vector<int> act(const Window& w, const std::vector<int>& v) {
    std::vector<int> u(v.size(), 0);
    for (std::size_t p = 0; p < v.size(); ++p) {
        if (!v[p]) continue;
        int q = w[p];
        u[std::abs(q) - 1] += q > 0 ? v[p] : -v[p];
    }
    return u;
}

inline bool is_positive_vector(const std::vector<int>& v) {
    for (int x : v)
        if (x) return x > 0;
    return false;
}

inline int length(const Window& w, const LieType& t) {
    int len = 0;
    for (const Root& r : positive_roots(t))
        if (!is_positive_vector(act(w, root_vector(t, r)))) ++len;
    return len;
}

// ⟨ρ, α∨⟩
inline int rho_pairing(const Root& r0, const LieType& t) {
    Root r = r0.normalized();
    int n = t.rank;
    switch (r.kind) {
    case RootKind::Delta: return r.j - r.i;
    case RootKind::Sigma:
        switch (t.family) {
        case Family::B: return 2 * n - r.i - r.j + 1;
        case Family::C: return 2 * n - r.i - r.j + 2;
        case Family::D: return 2 * n - r.i - r.j;
        default: break;
        }
        break;
    case RootKind::Diag:
        if (t.family == Family::B) return 2 * n - 2 * r.i + 1;
        if (t.family == Family::C) return n - r.i + 1;
        break;
    }
    throw std::invalid_argument("root not in type: " + root_string(r0));
}

} // namespace krm
