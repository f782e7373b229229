#pragma once

#include <string>
#include <vector>

#include "dgdual/matrix.hpp"

namespace dgdual {

// express v in a row-reduced basis; throws when v is outside the span
inline FpVec coords_in_rref_basis(const std::vector<FpVec>& basis, const FpVec& v, long long p) {
    FpVec w = v, coords(basis.size(), 0);
    for (std::size_t r = 0; r < basis.size(); ++r) {
        std::size_t lead = 0;
        while (lead < basis[r].size() && basis[r][lead] == 0) ++lead;
        if (lead == basis[r].size()) continue;
        coords[r] = w[lead];
        if (w[lead] != 0) fpvec_axpy(w, fp_neg(w[lead], p), basis[r], p);
    }
    if (!fpvec_is_zero(w)) throw std::domain_error("coords_in_rref_basis: vector outside span");
    return coords;
}

struct GradedDims {
    int lo = 0, hi = -1;
    std::vector<int> dims;

    GradedDims() = default;
    GradedDims(int l, int h) : lo(l), hi(h), dims(h >= l ? h - l + 1 : 0, 0) {}

    int dim(int d) const { return (d < lo || d > hi) ? 0 : dims[d - lo]; }
    void set_dim(int d, int n) { dims[d - lo] = n; }
    int total() const {
        int t = 0;
        for (int x : dims) t += x;
        return t;
    }
    bool in_window(int d) const { return d >= lo && d <= hi; }
};

// Finite-dimensional graded algebra over F_p by structure constants.
// Products landing outside the window must vanish identically; the bundled
// constructors only build windows that already contain every product.
struct GradedAlgebra {
    long long p = 2;
    GradedDims gd;
    std::vector<std::vector<std::string>> labels;              // per degree
    std::vector<std::vector<std::vector<FpVec>>> prod;         // [i][j][(a,b)]
    FpVec unit;                                                // degree 0

    int dim(int d) const { return gd.dim(d); }

    FpVec mul_basis(int i, int a, int j, int b) const {
        if (!gd.in_window(i + j)) return FpVec();
        if (!gd.in_window(i) || !gd.in_window(j)) return FpVec();
        const auto& t = prod[i - gd.lo][j - gd.lo];
        if (t.empty()) return fpvec_zero(dim(i + j));
        return t[(std::size_t)a * dim(j) + b];
    }

    FpVec mul(int i, const FpVec& x, int j, const FpVec& y) const {
        FpVec out(dim(i + j), 0);
        if (out.empty()) return out;
        for (int a = 0; a < dim(i); ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < dim(j); ++b) {
                if (y[b] == 0) continue;
                fpvec_axpy(out, fp_mul(x[a], y[b], p), mul_basis(i, a, j, b), p);
            }
        }
        return out;
    }

    void validate() const {
        for (int i = gd.lo; i <= gd.hi; ++i) {
            for (int a = 0; a < dim(i); ++a) {
                FpVec ea(dim(i), 0);
                ea[a] = 1;
                if (gd.in_window(0)) {
                    if (mul(0, unit, i, ea) != ea || mul(i, ea, 0, unit) != ea)
                        throw std::invalid_argument("graded algebra: unit fails");
                }
            }
        }
        for (int i = gd.lo; i <= gd.hi; ++i)
            for (int j = gd.lo; j <= gd.hi; ++j)
                for (int k = gd.lo; k <= gd.hi; ++k) {
                    if (!gd.in_window(i + j + k)) continue;
                    for (int a = 0; a < dim(i); ++a)
                        for (int b = 0; b < dim(j); ++b) {
                            FpVec ab = mul_basis(i, a, j, b);
                            for (int c = 0; c < dim(k); ++c) {
                                FpVec ec(dim(k), 0);
                                ec[c] = 1;
                                FpVec l = ab.empty() ? fpvec_zero(dim(i + j + k))
                                                     : mul(i + j, ab, k, ec);
                                FpVec eb(dim(j), 0);
                                eb[b] = 1;
                                FpVec bc = mul_basis(j, b, k, c);
                                FpVec ea(dim(i), 0);
                                ea[a] = 1;
                                FpVec r = bc.empty() ? fpvec_zero(dim(i + j + k))
                                                     : mul(i, ea, j + k, bc);
                                if (l != r)
                                    throw std::invalid_argument("graded algebra: not associative");
                            }
                        }
                }
    }
};

// Graded tensor product of algebras with the Koszul sign:
// (a|b)(a'|b') = (-1)^{|b||a'|} (aa'|bb').
inline GradedAlgebra tensor_algebra(const GradedAlgebra& A, const GradedAlgebra& B) {
    GradedAlgebra T;
    T.p = A.p;
    T.gd = GradedDims(A.gd.lo + B.gd.lo, A.gd.hi + B.gd.hi);
    T.labels.resize(T.gd.dims.size());
    // basis of degree n: pairs (i, a, b) with i + (n-i) = n, ordered by i, a, b
    struct Ent { int i, a, b; };
    std::vector<std::vector<Ent>> basis(T.gd.dims.size());
    for (int n = T.gd.lo; n <= T.gd.hi; ++n) {
        for (int i = A.gd.lo; i <= A.gd.hi; ++i) {
            int j = n - i;
            if (!B.gd.in_window(j)) continue;
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < B.dim(j); ++b) {
                    basis[n - T.gd.lo].push_back({i, a, b});
                    T.labels[n - T.gd.lo].push_back(A.labels[i - A.gd.lo][a] + "(x)" +
                                                    B.labels[j - B.gd.lo][b]);
                }
        }
        T.gd.set_dim(n, (int)basis[n - T.gd.lo].size());
    }
    auto index_of = [&](int n, int i, int a, int b) {
        const auto& bs = basis[n - T.gd.lo];
        for (std::size_t k = 0; k < bs.size(); ++k)
            if (bs[k].i == i && bs[k].a == a && bs[k].b == b) return (int)k;
        return -1;
    };
    T.prod.resize(T.gd.dims.size());
    for (int m = T.gd.lo; m <= T.gd.hi; ++m) {
        T.prod[m - T.gd.lo].resize(T.gd.dims.size());
        for (int n = T.gd.lo; n <= T.gd.hi; ++n) {
            if (!T.gd.in_window(m + n)) continue;
            auto& tab = T.prod[m - T.gd.lo][n - T.gd.lo];
            tab.assign((std::size_t)T.dim(m) * T.dim(n), FpVec(T.dim(m + n), 0));
            for (int x = 0; x < T.dim(m); ++x) {
                auto ex = basis[m - T.gd.lo][x];
                for (int y = 0; y < T.dim(n); ++y) {
                    auto ey = basis[n - T.gd.lo][y];
                    FpVec aa = A.mul_basis(ex.i, ex.a, ey.i, ey.a);
                    FpVec bb = B.mul_basis(m - ex.i, ex.b, n - ey.i, ey.b);
                    if (aa.empty() || bb.empty()) continue;
                    long long sign = (((m - ex.i) * ey.i) % 2 != 0) ? T.p - 1 : 1;
                    FpVec& out = tab[(std::size_t)x * T.dim(n) + y];
                    for (std::size_t ka = 0; ka < aa.size(); ++ka) {
                        if (aa[ka] == 0) continue;
                        for (std::size_t kb = 0; kb < bb.size(); ++kb) {
                            if (bb[kb] == 0) continue;
                            int idx = index_of(m + n, ex.i + ey.i, (int)ka, (int)kb);
                            out[idx] = fp_norm(out[idx] + sign * aa[ka] % T.p * bb[kb], T.p);
                        }
                    }
                }
            }
        }
    }
    if (A.gd.in_window(0) && B.gd.in_window(0)) {
        T.unit.assign(T.dim(0), 0);
        for (int a = 0; a < A.dim(0); ++a)
            for (int b = 0; b < B.dim(0); ++b) {
                int idx = index_of(0, 0, a, b);
                T.unit[idx] = fp_mul(A.unit[a], B.unit[b], T.p);
            }
    }
    return T;
}

// One action of a graded algebra on a graded space.
struct ModuleAction {
    bool left = false;
    const GradedAlgebra* A = nullptr;
    // tab[ai][mj][(a,m)] -> vector in module degree ai+mj; empty table = zero
    std::vector<std::vector<std::vector<FpVec>>> tab;
};

// Graded module, possibly carrying several commuting actions. The plain
// one-sided module of the interfaces is the actions.size() == 1 case.
struct GradedModule {
    long long p = 2;
    GradedDims gd;
    std::vector<std::vector<std::string>> labels;
    std::vector<ModuleAction> actions;

    int dim(int d) const { return gd.dim(d); }

    FpVec act_basis(std::size_t k, int ai, int a, int mj, int m) const {
        const ModuleAction& A = actions[k];
        if (!gd.in_window(ai + mj)) return FpVec();
        const auto& t = A.tab[ai - A.A->gd.lo][mj - gd.lo];
        if (t.empty()) return fpvec_zero(dim(ai + mj));
        return t[(std::size_t)a * dim(mj) + m];
    }

    // right: v.x ; left: x.v  (x in A^ai, v in M^mj)
    FpVec act(std::size_t k, int ai, const FpVec& x, int mj, const FpVec& v) const {
        FpVec out(dim(ai + mj), 0);
        if (out.empty()) return out;
        const GradedAlgebra& A = *actions[k].A;
        for (int a = 0; a < A.dim(ai); ++a) {
            if (x[a] == 0) continue;
            for (int m = 0; m < dim(mj); ++m) {
                if (v[m] == 0) continue;
                fpvec_axpy(out, fp_mul(x[a], v[m], p), act_basis(k, ai, a, mj, m), p);
            }
        }
        return out;
    }

    void validate_action(std::size_t k) const {
        const GradedAlgebra& A = *actions[k].A;
        bool left = actions[k].left;
        for (int mj = gd.lo; mj <= gd.hi; ++mj)
            for (int m = 0; m < dim(mj); ++m) {
                FpVec em(dim(mj), 0);
                em[m] = 1;
                if (A.gd.in_window(0) && act(k, 0, A.unit, mj, em) != em)
                    throw std::invalid_argument("graded module: unit fails");
                for (int ai = A.gd.lo; ai <= A.gd.hi; ++ai)
                    for (int a = 0; a < A.dim(ai); ++a) {
                        FpVec ea(A.dim(ai), 0);
                        ea[a] = 1;
                        for (int bj = A.gd.lo; bj <= A.gd.hi; ++bj)
                            for (int b = 0; b < A.dim(bj); ++b) {
                                FpVec eb(A.dim(bj), 0);
                                eb[b] = 1;
                                FpVec viaAB, direct;
                                if (!left) {
                                    // (m.a).b vs m.(ab)
                                    FpVec ma = act(k, ai, ea, mj, em);
                                    viaAB = act(k, bj, eb, ai + mj, ma);
                                    FpVec ab = A.mul(ai, ea, bj, eb);
                                    direct = act(k, ai + bj, ab, mj, em);
                                } else {
                                    // a.(b.m) vs (ab).m
                                    FpVec bm = act(k, bj, eb, mj, em);
                                    viaAB = act(k, ai, ea, bj + mj, bm);
                                    FpVec ab = A.mul(ai, ea, bj, eb);
                                    direct = act(k, ai + bj, ab, mj, em);
                                }
                                if (viaAB != direct)
                                    throw std::invalid_argument("graded module: associativity fails");
                            }
                    }
            }
    }

    // two right actions must commute in the Koszul-signed sense
    bool actions_koszul_commute(std::size_t k, std::size_t l) const {
        const GradedAlgebra& A = *actions[k].A;
        const GradedAlgebra& B = *actions[l].A;
        for (int mj = gd.lo; mj <= gd.hi; ++mj)
            for (int m = 0; m < dim(mj); ++m) {
                FpVec em(dim(mj), 0);
                em[m] = 1;
                for (int ai = A.gd.lo; ai <= A.gd.hi; ++ai)
                    for (int a = 0; a < A.dim(ai); ++a) {
                        FpVec ea(A.dim(ai), 0);
                        ea[a] = 1;
                        for (int bj = B.gd.lo; bj <= B.gd.hi; ++bj)
                            for (int b = 0; b < B.dim(bj); ++b) {
                                FpVec eb(B.dim(bj), 0);
                                eb[b] = 1;
                                FpVec x = act(l, bj, eb, ai + mj, act(k, ai, ea, mj, em));
                                FpVec y = act(k, ai, ea, bj + mj, act(l, bj, eb, mj, em));
                                if ((ai * bj) % 2 != 0)
                                    for (auto& e : y) e = fp_neg(e, p);
                                if (x != y) return false;
                            }
                    }
            }
        return true;
    }

    // left and right actions of a bimodule commute literally
    bool bimodule_commutes(std::size_t kl, std::size_t kr) const {
        const GradedAlgebra& A = *actions[kl].A;
        const GradedAlgebra& B = *actions[kr].A;
        for (int mj = gd.lo; mj <= gd.hi; ++mj)
            for (int m = 0; m < dim(mj); ++m) {
                FpVec em(dim(mj), 0);
                em[m] = 1;
                for (int ai = A.gd.lo; ai <= A.gd.hi; ++ai)
                    for (int a = 0; a < A.dim(ai); ++a) {
                        FpVec ea(A.dim(ai), 0);
                        ea[a] = 1;
                        for (int bj = B.gd.lo; bj <= B.gd.hi; ++bj)
                            for (int b = 0; b < B.dim(bj); ++b) {
                                FpVec eb(B.dim(bj), 0);
                                eb[b] = 1;
                                FpVec x = act(kr, bj, eb, ai + mj, act(kl, ai, ea, mj, em));
                                FpVec y = act(kl, ai, ea, bj + mj, act(kr, bj, eb, mj, em));
                                if (x != y) return false;
                            }
                    }
            }
        return true;
    }
};

// Free one-sided module on generators (degree, label).
inline GradedModule free_module(const GradedAlgebra& A, bool left,
                                const std::vector<std::pair<int, std::string>>& gens,
                                int lo, int hi) {
    GradedModule M;
    M.p = A.p;
    M.gd = GradedDims(lo, hi);
    M.labels.resize(M.gd.dims.size());
    // basis at degree t: (gen g, a in A^{t - deg g}); ordered by g then a
    struct Ent { int g, ai, a; };
    std::vector<std::vector<Ent>> basis(M.gd.dims.size());
    for (int t = lo; t <= hi; ++t) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int ai = t - gens[g].first;
            if (!A.gd.in_window(ai)) continue;
            for (int a = 0; a < A.dim(ai); ++a) {
                basis[t - lo].push_back({(int)g, ai, a});
                M.labels[t - lo].push_back(gens[g].second + "*" + A.labels[ai - A.gd.lo][a]);
            }
        }
        M.gd.set_dim(t, (int)basis[t - lo].size());
    }
    auto index_of = [&](int t, int g, int a) {
        const auto& bs = basis[t - lo];
        for (std::size_t k = 0; k < bs.size(); ++k)
            if (bs[k].g == g && bs[k].a == a) return (int)k;
        return -1;
    };
    ModuleAction act;
    act.left = left;
    act.A = &A;
    act.tab.resize(A.gd.dims.size());
    for (int ai = A.gd.lo; ai <= A.gd.hi; ++ai) {
        act.tab[ai - A.gd.lo].resize(M.gd.dims.size());
        for (int mj = lo; mj <= hi; ++mj) {
            if (!M.gd.in_window(ai + mj)) continue;
            auto& tab = act.tab[ai - A.gd.lo][mj - lo];
            tab.assign((std::size_t)A.dim(ai) * M.dim(mj), FpVec(M.dim(ai + mj), 0));
            for (int a = 0; a < A.dim(ai); ++a)
                for (int m = 0; m < M.dim(mj); ++m) {
                    auto em = basis[mj - lo][m];
                    // right: (g*b).a = g*(ba); left: a.(g*b) = g*(ab)
                    FpVec ba = left ? A.mul_basis(ai, a, em.ai, em.a)
                                    : A.mul_basis(em.ai, em.a, ai, a);
                    if (ba.empty()) continue;
                    FpVec& out = tab[(std::size_t)a * M.dim(mj) + m];
                    for (std::size_t kb = 0; kb < ba.size(); ++kb) {
                        if (ba[kb] == 0) continue;
                        int idx = index_of(ai + mj, em.g, (int)kb);
                        if (idx >= 0) out[idx] = ba[kb];
                    }
                }
        }
    }
    M.actions.push_back(std::move(act));
    return M;
}

}  // namespace dgdual
