#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dgdual/matrix.hpp"

namespace dgdual {

// A finite group with a designated subgroup U, both given by index tables.
struct FinGroupDatum {
    int order = 1;
    std::vector<int> mul;  // order x order, row-major
    std::vector<int> inv;
    int id = 0;
    std::vector<int> U;  // sorted member indices

    int m(int a, int b) const { return mul[a * order + b]; }
    int i(int a) const { return inv[a]; }
    int conj(int g, int x) const { return m(m(g, x), i(g)); }  // g x g^-1

    bool in_U(int g) const { return std::binary_search(U.begin(), U.end(), g); }

    void validate() const {
        if ((int)mul.size() != order * order || (int)inv.size() != order)
            throw std::invalid_argument("group: table size mismatch");
        for (int x : mul)
            if (x < 0 || x >= order) throw std::invalid_argument("group: index out of range");
        for (int a = 0; a < order; ++a) {
            if (m(id, a) != a || m(a, id) != a) throw std::invalid_argument("group: identity fails");
            if (m(a, i(a)) != id || m(i(a), a) != id) throw std::invalid_argument("group: inverse fails");
        }
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    if (m(m(a, b), c) != m(a, m(b, c)))
                        throw std::invalid_argument("group: not associative");
        if (U.empty() || !std::is_sorted(U.begin(), U.end()))
            throw std::invalid_argument("group: U must be sorted and nonempty");
        if (!in_U(id)) throw std::invalid_argument("group: U misses identity");
        for (int a : U) {
            if (!in_U(i(a))) throw std::invalid_argument("group: U not inverse-closed");
            for (int b : U)
                if (!in_U(m(a, b))) throw std::invalid_argument("group: U not closed");
        }
    }

    // Left cosets gU; representative = least element of the coset.
    std::vector<int> coset_reps() const {
        std::vector<int> rep_of(order, -1), reps;
        for (int g = 0; g < order; ++g) {
            if (rep_of[g] >= 0) continue;
            int least = order;
            std::vector<int> members;
            for (int u : U) members.push_back(m(g, u));
            for (int x : members) least = std::min(least, x);
            for (int x : members) rep_of[x] = least;
            reps.push_back(least);
        }
        std::sort(reps.begin(), reps.end());
        return reps;
    }

    std::vector<int> coset_index_map() const {  // element -> index into coset_reps()
        auto reps = coset_reps();
        std::vector<int> idx(order, -1);
        for (std::size_t k = 0; k < reps.size(); ++k)
            for (int u : U) idx[m(reps[k], u)] = (int)k;
        return idx;
    }

    // Double cosets UhU; representative = least element.
    std::vector<int> double_coset_reps() const {
        std::vector<int> seen(order, 0), reps;
        for (int g = 0; g < order; ++g) {
            if (seen[g]) continue;
            int least = order;
            std::vector<int> members;
            for (int u : U)
                for (int v : U) members.push_back(m(m(u, g), v));
            for (int x : members) least = std::min(least, x);
            for (int x : members) seen[x] = 1;
            reps.push_back(least);
        }
        std::sort(reps.begin(), reps.end());
        return reps;
    }

    std::vector<int> double_coset_index_map() const {
        auto reps = double_coset_reps();
        std::vector<int> idx(order, -1);
        for (std::size_t k = 0; k < reps.size(); ++k)
            for (int u : U)
                for (int v : U) idx[m(m(u, reps[k]), v)] = (int)k;
        return idx;
    }

    // U_h = U intersect h U h^-1.
    std::vector<int> U_h(int h) const {
        std::vector<int> out;
        for (int u : U)
            if (in_U(m(m(i(h), u), h))) out.push_back(u);
        return out;
    }

    // Representatives of U / W for a subgroup W of U (least element per coset).
    std::vector<int> left_coset_reps_in_U(const std::vector<int>& W) const {
        std::vector<int> rep_of(order, -1), reps;
        for (int u : U) {
            if (rep_of[u] >= 0) continue;
            int least = order;
            std::vector<int> members;
            for (int w : W) members.push_back(m(u, w));
            for (int x : members) least = std::min(least, x);
            for (int x : members) rep_of[x] = least;
            reps.push_back(least);
        }
        std::sort(reps.begin(), reps.end());
        return reps;
    }
};

// --- text format -----------------------------------------------------------
// line 1: "order n"
// n lines: n space-separated indices (mul table rows)
// 1 line: n indices (inverses)
// last line: "U:" followed by sorted member indices

inline FinGroupDatum parse_group(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    FinGroupDatum g;
    if (!(in >> word) || word != "order") throw std::invalid_argument("group parse: expected 'order'");
    if (!(in >> g.order) || g.order <= 0) throw std::invalid_argument("group parse: bad order");
    g.mul.resize(g.order * g.order);
    for (auto& x : g.mul)
        if (!(in >> x)) throw std::invalid_argument("group parse: short mul table");
    g.inv.resize(g.order);
    for (auto& x : g.inv)
        if (!(in >> x)) throw std::invalid_argument("group parse: short inverse list");
    if (!(in >> word) || word != "U:") throw std::invalid_argument("group parse: expected 'U:'");
    int u;
    while (in >> u) g.U.push_back(u);
    for (int a = 0; a < g.order; ++a)
        if (g.m(g.i(a), a) == a && g.m(a, a) == a) g.id = a;  // idempotent = identity
    g.validate();
    return g;
}

inline std::string group_to_text(const FinGroupDatum& g) {
    std::ostringstream out;
    out << "order " << g.order << "\n";
    for (int a = 0; a < g.order; ++a) {
        for (int b = 0; b < g.order; ++b) out << (b ? " " : "") << g.m(a, b);
        out << "\n";
    }
    for (int a = 0; a < g.order; ++a) out << (a ? " " : "") << g.i(a);
    out << "\nU:";
    for (int u : g.U) out << " " << u;
    out << "\n";
    return out.str();
}

// --- builders ---------------------------------------------------------------

inline FinGroupDatum make_cyclic(int n, const std::vector<int>& U_members) {
    FinGroupDatum g;
    g.order = n;
    g.mul.resize(n * n);
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        g.inv[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) g.mul[a * n + b] = (a + b) % n;
    }
    g.id = 0;
    g.U = U_members;
    g.validate();
    return g;
}

namespace detail {
inline std::vector<std::vector<int>> perms3() {
    // all permutations of {0,1,2} in lex order of one-line notation
    std::vector<int> base = {0, 1, 2};
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do { out.push_back(base); } while (std::next_permutation(base.begin(), base.end()));
    return out;
}
}  // namespace detail

// Symmetric group on 3 points; U generated by the transposition swapping
// points 0 and 1.
inline FinGroupDatum make_s3() {
    auto ps = detail::perms3();
    int n = (int)ps.size();
    auto find = [&](const std::vector<int>& q) {
        for (int k = 0; k < n; ++k)
            if (ps[k] == q) return k;
        throw std::logic_error("perm not found");
    };
    FinGroupDatum g;
    g.order = n;
    g.mul.resize(n * n);
    g.inv.resize(n);
    for (int a = 0; a < n; ++a) {
        std::vector<int> ia(3);
        for (int x = 0; x < 3; ++x) ia[ps[a][x]] = x;
        g.inv[a] = find(ia);
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(3);
            for (int x = 0; x < 3; ++x) c[x] = ps[a][ps[b][x]];  // (a.b)(x) = a(b(x))
            g.mul[a * n + b] = find(c);
        }
    }
    g.id = find({0, 1, 2});
    int t01 = find({1, 0, 2});
    g.U = {g.id, t01};
    std::sort(g.U.begin(), g.U.end());
    g.validate();
    return g;
}

// transposition of points 0 and 2 in make_s3 indexing (an order-2 element
// outside U, used as the off-identity double coset representative)
inline int s3_t02(const FinGroupDatum& g) {
    for (int a = 0; a < g.order; ++a)
        if (a != g.id && g.m(a, a) == g.id && !g.in_U(a)) return a;
    throw std::logic_error("no transposition outside U");
}

// Dihedral group of order 8: elements r^i s^j, i<4, j<2, with s r = r^3 s.
// Index = i + 4j. U = {1, s}.
inline FinGroupDatum make_d4() {
    FinGroupDatum g;
    g.order = 8;
    g.mul.resize(64);
    g.inv.resize(8);
    auto idx = [](int i, int j) { return i + 4 * j; };
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
                    int i = ((i1 + (j1 ? (4 - i2) % 4 : i2)) % 4 + 4) % 4;
                    int j = (j1 + j2) % 2;
                    g.mul[idx(i1, j1) * 8 + idx(i2, j2)] = idx(i, j);
                }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) {
            int a = idx(i, j);
            for (int b = 0; b < 8; ++b)
                if (g.mul[a * 8 + b] == 0) { g.inv[a] = b; break; }
        }
    g.id = 0;
    g.U = {0, idx(0, 1)};
    g.validate();
    return g;
}

// (Z/p)^d semidirect C, where C acts on (Z/p)^d through the given matrices
// (one invertible d x d matrix over F_p per element of C). Elements are
// pairs (v, c) with index v_index + p^d * c; (v,c)(w,c') = (v + B_c w, cc').
inline FinGroupDatum make_semidirect(long long p, int d, const FinGroupDatum& C,
                                     const std::vector<FpMatrix>& action_on_vec) {
    int pd = 1;
    for (int k = 0; k < d; ++k) pd *= (int)p;
    auto vec_of = [&](int vi) {
        FpVec v(d);
        for (int k = 0; k < d; ++k) { v[k] = vi % p; vi /= (int)p; }
        return v;
    };
    auto index_of = [&](const FpVec& v) {
        int vi = 0;
        for (int k = d - 1; k >= 0; --k) vi = vi * (int)p + (int)v[k];
        return vi;
    };
    FinGroupDatum g;
    g.order = pd * C.order;
    g.mul.resize(g.order * g.order);
    g.inv.resize(g.order);
    for (int c1 = 0; c1 < C.order; ++c1)
        for (int v1 = 0; v1 < pd; ++v1) {
            int a = v1 + pd * c1;
            for (int c2 = 0; c2 < C.order; ++c2)
                for (int v2 = 0; v2 < pd; ++v2) {
                    int b = v2 + pd * c2;
                    FpVec w = mat_vec(action_on_vec[c1], vec_of(v2));
                    FpVec s = vec_of(v1);
                    for (int k = 0; k < d; ++k) s[k] = fp_add(s[k], w[k], p);
                    g.mul[a * g.order + b] = index_of(s) + pd * C.m(c1, c2);
                }
        }
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (g.mul[a * g.order + b] == 0 && g.mul[b * g.order + a] == 0) { g.inv[a] = b; break; }
    g.id = 0;
    g.U.resize(pd);
    for (int v = 0; v < pd; ++v) g.U[v] = v;
    g.validate();
    return g;
}

}  // namespace dgdual
