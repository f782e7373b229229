#pragma once

#include "dgdual/crossed.hpp"

namespace dgdual {

// E as a right module over itself.
inline GradedModule algebra_as_right_module(const GradedAlgebra& E) {
    GradedModule M;
    M.p = E.p;
    M.gd = E.gd;
    M.labels = E.labels;
    ModuleAction act;
    act.left = false;
    act.A = &E;
    act.tab.resize(E.gd.dims.size());
    for (int ai = E.gd.lo; ai <= E.gd.hi; ++ai) {
        act.tab[ai - E.gd.lo].resize(E.gd.dims.size());
        for (int mj = E.gd.lo; mj <= E.gd.hi; ++mj) {
            if (!E.gd.in_window(ai + mj)) continue;
            auto& tab = act.tab[ai - E.gd.lo][mj - E.gd.lo];
            tab.assign((std::size_t)E.dim(ai) * E.dim(mj), FpVec());
            for (int a = 0; a < E.dim(ai); ++a)
                for (int m = 0; m < E.dim(mj); ++m)
                    tab[(std::size_t)a * E.dim(mj) + m] = E.mul_basis(mj, m, ai, a);
        }
    }
    M.actions.push_back(std::move(act));
    return M;
}

// Shifted graded dual with the twisted right action
// (f t)(e) = (-1)^{deg t deg e} f(e . sigma(t)); degree i piece = dual of M^{d-i}.
inline GradedModule delta_gr(const GradedModule& M, std::size_t aM,
                             const GradedAntiInvolution& sigma, int d) {
    const GradedAlgebra& E = *M.actions[aM].A;
    GradedModule D;
    D.p = M.p;
    D.gd = GradedDims(d - M.gd.hi, d - M.gd.lo);
    D.labels.resize(D.gd.dims.size());
    for (int i = D.gd.lo; i <= D.gd.hi; ++i) {
        D.gd.set_dim(i, M.dim(d - i));
        for (const auto& l : M.labels[d - i - M.gd.lo]) D.labels[i - D.gd.lo].push_back(l + "^");
    }
    ModuleAction act;
    act.left = false;
    act.A = &E;
    act.tab.resize(E.gd.dims.size());
    for (int s = E.gd.lo; s <= E.gd.hi; ++s) {
        act.tab[s - E.gd.lo].resize(D.gd.dims.size());
        for (int i = D.gd.lo; i <= D.gd.hi; ++i) {
            if (!D.gd.in_window(i + s)) continue;
            auto& tab = act.tab[s - E.gd.lo][i - D.gd.lo];
            int mdim = D.dim(i), ndim = D.dim(i + s);
            tab.assign((std::size_t)E.dim(s) * mdim, FpVec(ndim, 0));
            int edeg = d - i - s;  // degree of the evaluation argument in M
            if (!M.gd.in_window(edeg)) continue;
            bool flip = ((s % 2) != 0) && ((edeg % 2) != 0);
            for (int a = 0; a < E.dim(s); ++a) {
                FpVec ea(E.dim(s), 0);
                ea[a] = 1;
                FpVec sa = sigma.apply(s, ea);
                for (int n = 0; n < ndim; ++n) {
                    FpVec en(ndim, 0);
                    en[n] = 1;
                    FpVec w = M.act(aM, s, sa, edeg, en);  // e_n . sigma(t) in M^{d-i}
                    for (int m = 0; m < mdim; ++m) {
                        long long v = w[m];
                        if (flip) v = fp_neg(v, M.p);
                        tab[(std::size_t)a * mdim + m][n] = v;
                    }
                }
            }
        }
    }
    D.actions.push_back(std::move(act));
    return D;
}

// B = delta_gr(E) with its two right actions: #0 the twisted-dual action,
// #1 the predual of left multiplication, (f .2 t)(e) = f(t e).
inline GradedModule bimodule_B(const GradedAlgebra& E, const GradedAntiInvolution& sigma, int d) {
    GradedModule B = delta_gr(algebra_as_right_module(E), 0, sigma, d);
    ModuleAction act2;
    act2.left = false;
    act2.A = &E;
    act2.tab.resize(E.gd.dims.size());
    for (int s = E.gd.lo; s <= E.gd.hi; ++s) {
        act2.tab[s - E.gd.lo].resize(B.gd.dims.size());
        for (int i = B.gd.lo; i <= B.gd.hi; ++i) {
            if (!B.gd.in_window(i + s)) continue;
            auto& tab = act2.tab[s - E.gd.lo][i - B.gd.lo];
            int mdim = B.dim(i), ndim = B.dim(i + s);
            tab.assign((std::size_t)E.dim(s) * mdim, FpVec(ndim, 0));
            int edeg = d - i - s;
            if (!E.gd.in_window(edeg)) continue;
            for (int a = 0; a < E.dim(s); ++a) {
                FpVec ea(E.dim(s), 0);
                ea[a] = 1;
                for (int n = 0; n < ndim; ++n) {
                    FpVec en(ndim, 0);
                    en[n] = 1;
                    FpVec w = E.mul(s, ea, edeg, en);  // t e_n in E^{d-i}
                    for (int m = 0; m < mdim; ++m)
                        tab[(std::size_t)a * mdim + m][n] = w[m];
                }
            }
        }
    }
    B.actions.push_back(std::move(act2));
    return B;
}

// <f, e> for f in B^i (coordinates in the dual basis of E^{d-i}) and e in E^{d-i}.
inline long long yoneda_pairing(const GradedAlgebra& E, int i, int d, const FpVec& f,
                                const FpVec& e) {
    if ((int)f.size() != E.dim(d - i) || (int)e.size() != E.dim(d - i))
        throw std::invalid_argument("yoneda_pairing: degrees are not complementary");
    long long s = 0;
    for (std::size_t k = 0; k < f.size(); ++k) s = fp_norm(s + f[k] * e[k], E.p);
    return s;
}

inline FpMatrix pairing_gram(const GradedAlgebra& E, int i, int d) {
    int n = E.dim(d - i);
    FpMatrix g(n, n, E.p);
    for (int a = 0; a < n; ++a) {
        FpVec fa(n, 0);
        fa[a] = 1;
        for (int b = 0; b < n; ++b) {
            FpVec eb(n, 0);
            eb[b] = 1;
            g.set(a, b, yoneda_pairing(E, i, d, fa, eb));
        }
    }
    return g;
}

// The pairing-adjoint of sigma: (s* f)(e) = f(sigma(e)). Per B-degree i this
// is the transpose of sigma at degree d-i.
inline std::vector<FpMatrix> swap_sigma_star(const GradedAlgebra& E,
                                             const GradedAntiInvolution& sigma, int d) {
    std::vector<FpMatrix> out;
    for (int i = 0; i <= d; ++i) out.push_back(mat_transpose(sigma.mats[d - i - E.gd.lo]));
    return out;
}

// --- E*(n): Lambda (x) k[C]^{(x)n} with one left and n right E-actions ---------

inline GradedModule ext_n(const CrossedModel& M, int n, std::size_t maxTotalDim = 1u << 20) {
    const GradedAlgebra& E = M.E;
    const FinGroupDatum& C = M.datum.C;
    int d = M.top(), nc = M.nC();
    long long p = M.datum.p;
    std::size_t cn = 1;
    for (int k = 0; k < n; ++k) cn *= (std::size_t)nc;
    if ((std::size_t)M.Lambda.gd.total() * cn > maxTotalDim)
        throw std::invalid_argument("ext_n: size overflow");

    GradedModule X;
    X.p = p;
    X.gd = GradedDims(0, d);
    X.labels.resize(d + 1);
    // basis at degree i: (subset s, c_1..c_n), index = s*nc^n + mixed radix c
    auto tuple_index = [&](const std::vector<int>& cs) {
        std::size_t idx = 0;
        for (int k = 0; k < n; ++k) idx = idx * nc + cs[k];
        return idx;
    };
    std::vector<std::vector<int>> tuples;
    {
        std::vector<int> cur(n, 0);
        for (std::size_t t = 0; t < cn; ++t) {
            std::size_t x = t;
            for (int k = n - 1; k >= 0; --k) { cur[k] = (int)(x % nc); x /= nc; }
            tuples.push_back(cur);
        }
    }
    for (int i = 0; i <= d; ++i) {
        X.gd.set_dim(i, (int)(M.Lambda.dim(i) * cn));
        for (int s = 0; s < M.Lambda.dim(i); ++s)
            for (const auto& cs : tuples) {
                std::string l = M.Lambda.labels[i][s] + "|";
                for (int k = 0; k < n; ++k) l += (k ? "," : "") + std::to_string(cs[k]);
                X.labels[i].push_back(l);
            }
    }
    auto x_index = [&](int s, const std::vector<int>& cs) {
        return (std::size_t)s * cn + tuple_index(cs);
    };

    // left action: (mu_T|b) . (y_S|c...) = (mu_T ^ L_b y_S) | (b c_1, ..., b c_n)
    ModuleAction left;
    left.left = true;
    left.A = &E;
    left.tab.resize(d + 1);
    for (int ai = 0; ai <= d; ++ai) {
        left.tab[ai].resize(d + 1);
        for (int mj = 0; mj <= d; ++mj) {
            if (ai + mj > d) continue;
            auto& tab = left.tab[ai][mj];
            tab.assign((std::size_t)E.dim(ai) * X.dim(mj), FpVec(X.dim(ai + mj), 0));
            for (int t = 0; t < M.Lambda.dim(ai); ++t)
                for (int b = 0; b < nc; ++b) {
                    FpVec et(M.Lambda.dim(ai), 0);
                    et[t] = 1;
                    for (int s = 0; s < M.Lambda.dim(mj); ++s) {
                        FpVec Ls = M.Lcompound[b][mj].col(s);
                        FpVec w = M.Lambda.mul(ai, et, mj, Ls);
                        for (const auto& cs : tuples) {
                            std::vector<int> bc(n);
                            for (int k = 0; k < n; ++k) bc[k] = C.m(b, cs[k]);
                            FpVec& out = tab[(std::size_t)M.e_index(ai, t, b) * X.dim(mj) +
                                             x_index(s, cs)];
                            for (int u = 0; u < M.Lambda.dim(ai + mj); ++u)
                                out[x_index(u, bc)] = w[u];
                        }
                    }
                }
        }
    }
    X.actions.push_back(std::move(left));

    // right action #m: (y_S|c...) . (mu_T|b) = (y_S ^ L_{c_m} mu_T) | (..., c_m b, ...)
    for (int mth = 0; mth < n; ++mth) {
        ModuleAction right;
        right.left = false;
        right.A = &E;
        right.tab.resize(d + 1);
        for (int ai = 0; ai <= d; ++ai) {
            right.tab[ai].resize(d + 1);
            for (int mj = 0; mj <= d; ++mj) {
                if (ai + mj > d) continue;
                auto& tab = right.tab[ai][mj];
                tab.assign((std::size_t)E.dim(ai) * X.dim(mj), FpVec(X.dim(ai + mj), 0));
                for (int t = 0; t < M.Lambda.dim(ai); ++t)
                    for (int b = 0; b < nc; ++b)
                        for (int s = 0; s < M.Lambda.dim(mj); ++s)
                            for (const auto& cs : tuples) {
                                FpVec es(M.Lambda.dim(mj), 0);
                                es[s] = 1;
                                FpVec Lt = M.Lcompound[cs[mth]][ai].col(t);
                                FpVec w = M.Lambda.mul(mj, es, ai, Lt);
                                std::vector<int> cb = cs;
                                cb[mth] = C.m(cs[mth], b);
                                FpVec& out = tab[(std::size_t)M.e_index(ai, t, b) * X.dim(mj) +
                                                 x_index(s, cs)];
                                for (int u = 0; u < M.Lambda.dim(ai + mj); ++u)
                                    out[x_index(u, cb)] = w[u];
                            }
            }
        }
        X.actions.push_back(std::move(right));
    }
    return X;
}

// the factor swap on E*(2): y_S|c1,c2 -> y_S|c2,c1
inline std::vector<FpMatrix> ext2_factor_swap(const CrossedModel& M, const GradedModule& X2) {
    int nc = M.nC();
    std::vector<FpMatrix> out;
    for (int i = 0; i <= M.top(); ++i) {
        FpMatrix m(X2.dim(i), X2.dim(i), M.datum.p);
        for (int s = 0; s < M.Lambda.dim(i); ++s)
            for (int c1 = 0; c1 < nc; ++c1)
                for (int c2 = 0; c2 < nc; ++c2)
                    m.set((std::size_t)s * nc * nc + c2 * nc + c1,
                          (std::size_t)s * nc * nc + c1 * nc + c2, 1);
        out.push_back(std::move(m));
    }
    return out;
}

// --- bundled right modules ----------------------------------------------------

// k in degree 0: positive degrees act by zero, degree 0 through the augmentation.
inline GradedModule trivial_module_k(const GradedAlgebra& E) {
    GradedModule M;
    M.p = E.p;
    M.gd = GradedDims(0, 0);
    M.gd.set_dim(0, 1);
    M.labels = {{"1"}};
    ModuleAction act;
    act.left = false;
    act.A = &E;
    act.tab.resize(E.gd.dims.size());
    act.tab[0 - E.gd.lo].resize(1);
    auto& tab = act.tab[0 - E.gd.lo][0];
    tab.assign(E.dim(0), FpVec(1, 0));
    // both bundled algebra shapes have degree-zero basis mapping to 1
    for (int a = 0; a < E.dim(0); ++a) tab[a][0] = 1;
    M.actions.push_back(std::move(act));
    return M;
}

// H^*(U,k) as a right module: x . (mu|b) = L_{b^-1}(x ^ mu).
inline GradedModule cohomology_module(const CrossedModel& M) {
    const GradedAlgebra& E = M.E;
    int d = M.top(), nc = M.nC();
    GradedModule X;
    X.p = M.datum.p;
    X.gd = M.Lambda.gd;
    X.labels = M.Lambda.labels;
    ModuleAction act;
    act.left = false;
    act.A = &E;
    act.tab.resize(d + 1);
    for (int s = 0; s <= d; ++s) {
        act.tab[s].resize(d + 1);
        for (int j = 0; j <= d; ++j) {
            if (s + j > d) continue;
            auto& tab = act.tab[s][j];
            tab.assign((std::size_t)E.dim(s) * X.dim(j), FpVec(X.dim(s + j), 0));
            for (int t = 0; t < M.Lambda.dim(s); ++t)
                for (int b = 0; b < nc; ++b) {
                    FpVec et(M.Lambda.dim(s), 0);
                    et[t] = 1;
                    int bi = M.datum.C.i(b);
                    for (int m = 0; m < X.dim(j); ++m) {
                        FpVec em(X.dim(j), 0);
                        em[m] = 1;
                        FpVec w = mat_vec(M.Lcompound[bi][s + j], M.Lambda.mul(j, em, s, et));
                        tab[(std::size_t)M.e_index(s, t, b) * X.dim(j) + m] = w;
                    }
                }
        }
    }
    X.actions.push_back(std::move(act));
    return X;
}

inline GradedModule shift_module(const GradedModule& M, int s) {
    GradedModule out = M;
    out.gd.lo = M.gd.lo + s;
    out.gd.hi = M.gd.hi + s;
    return out;
}

// --- module maps and Hom spaces -------------------------------------------------

// check phi(m . a) = phi(m) . a for per-degree matrices aligned to the union window
inline bool is_module_map(const GradedModule& Msrc, std::size_t aS, const GradedModule& Ntgt,
                          std::size_t aT, const std::vector<FpMatrix>& mats, int lo, int hi) {
    const GradedAlgebra& E = *Msrc.actions[aS].A;
    auto matAt = [&](int t) -> const FpMatrix& { return mats[t - lo]; };
    for (int t = lo; t <= hi; ++t) {
        if (Msrc.dim(t) == 0) continue;
        for (int s = E.gd.lo; s <= E.gd.hi; ++s) {
            if (t + s > hi || Ntgt.dim(t + s) + Msrc.dim(t + s) == 0) continue;
            for (int a = 0; a < E.dim(s); ++a) {
                FpVec ea(E.dim(s), 0);
                ea[a] = 1;
                for (int m = 0; m < Msrc.dim(t); ++m) {
                    FpVec em(Msrc.dim(t), 0);
                    em[m] = 1;
                    FpVec lhs = Msrc.dim(t + s) ? mat_vec(matAt(t + s), Msrc.act(aS, s, ea, t, em))
                                                : fpvec_zero(Ntgt.dim(t + s));
                    FpVec rhs = Ntgt.act(aT, s, ea, t, mat_vec(matAt(t), em));
                    if (lhs != rhs) return false;
                }
            }
        }
    }
    return true;
}

// unknown layout for a degree-0 map M -> N on [lo, hi]: phi_t row-major
inline std::vector<std::size_t> hom_unknown_offsets(const GradedModule& M, const GradedModule& N,
                                                    int lo, int hi) {
    std::vector<std::size_t> offset(hi - lo + 2, 0);
    for (int t = lo; t <= hi; ++t)
        offset[t - lo + 1] = offset[t - lo] + (std::size_t)N.dim(t) * M.dim(t);
    return offset;
}

// linearity constraints phi_u(m.a) - phi_t(m).a = 0 as rows over the unknowns
inline std::vector<FpVec> hom_linearity_rows(const GradedModule& M, std::size_t aS,
                                             const GradedModule& N, std::size_t aT, int lo,
                                             int hi) {
    const GradedAlgebra& E = *M.actions[aS].A;
    long long p = M.p;
    auto offset = hom_unknown_offsets(M, N, lo, hi);
    std::size_t nunk = offset[hi - lo + 1];
    std::vector<FpVec> rows;
    for (int t = lo; t <= hi; ++t)
        for (int s = E.gd.lo; s <= E.gd.hi; ++s) {
            int u = t + s;
            if (u < lo || u > hi) continue;
            for (int a = 0; a < E.dim(s); ++a) {
                FpVec ea(E.dim(s), 0);
                ea[a] = 1;
                for (int m = 0; m < M.dim(t); ++m) {
                    FpVec em(M.dim(t), 0);
                    em[m] = 1;
                    FpVec ma = M.act(aS, s, ea, t, em);  // in M^u
                    for (int r = 0; r < N.dim(u); ++r) {
                        FpVec row(nunk, 0);
                        for (int x = 0; x < M.dim(u); ++x)
                            if (ma[x] != 0)
                                row[offset[u - lo] + (std::size_t)r * M.dim(u) + x] =
                                    fp_add(row[offset[u - lo] + (std::size_t)r * M.dim(u) + x],
                                           ma[x], p);
                        for (int y = 0; y < N.dim(t); ++y) {
                            FpVec ey(N.dim(t), 0);
                            ey[y] = 1;
                            FpVec ya = N.act(aT, s, ea, t, ey);
                            if (ya[r] != 0)
                                row[offset[t - lo] + (std::size_t)y * M.dim(t) + m] = fp_sub(
                                    row[offset[t - lo] + (std::size_t)y * M.dim(t) + m], ya[r], p);
                        }
                        if (!fpvec_is_zero(row)) rows.push_back(std::move(row));
                    }
                }
            }
        }
    return rows;
}

// basis of degree-0 E-linear maps M -> N (same algebra, right actions aS/aT)
inline std::vector<std::vector<FpMatrix>> hom_module_basis(const GradedModule& M, std::size_t aS,
                                                           const GradedModule& N, std::size_t aT,
                                                           int lo, int hi) {
    long long p = M.p;
    auto offset = hom_unknown_offsets(M, N, lo, hi);
    std::size_t nunk = offset[hi - lo + 1];
    auto rows = hom_linearity_rows(M, aS, N, aT, lo, hi);
    std::vector<FpVec> sols;
    if (rows.empty()) {
        for (std::size_t k = 0; k < nunk; ++k) {
            FpVec v(nunk, 0);
            v[k] = 1;
            sols.push_back(std::move(v));
        }
    } else {
        sols = kernel_basis(FpMatrix::from_rows(rows, nunk, p));
    }
    std::vector<std::vector<FpMatrix>> out;
    for (const auto& v : sols) {
        std::vector<FpMatrix> mats;
        for (int t = lo; t <= hi; ++t) {
            FpMatrix mt(N.dim(t), M.dim(t), p);
            for (std::size_t k = 0; k < mt.a.size(); ++k) mt.a[k] = v[offset[t - lo] + k];
            mats.push_back(std::move(mt));
        }
        out.push_back(std::move(mats));
    }
    return out;
}

// --- submodules, covers, exact sequences ---------------------------------------

struct Submodule {
    GradedModule mod;                    // with inherited action(s)
    std::vector<std::vector<FpVec>> basis;  // per degree, rref rows in ambient coords
};

inline Submodule submodule_from_vectors(const GradedModule& M, std::size_t aM,
                                        std::vector<std::vector<FpVec>> seed) {
    const GradedAlgebra& E = *M.actions[aM].A;
    long long p = M.p;
    int lo = M.gd.lo, hi = M.gd.hi;
    std::vector<std::vector<FpVec>> span(hi - lo + 1);
    for (int t = lo; t <= hi; ++t)
        if (t - lo < (int)seed.size())
            for (auto& v : seed[t - lo]) span[t - lo].push_back(v);
    // close under the action
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = lo; t <= hi; ++t) {
            auto base = span_basis(span[t - lo], M.dim(t), p);
            for (const auto& v : base)
                for (int s = E.gd.lo; s <= E.gd.hi; ++s) {
                    if (s == 0) continue;
                    int u = t + s;
                    if (u < lo || u > hi || M.dim(u) == 0) continue;
                    for (int a = 0; a < E.dim(s); ++a) {
                        FpVec ea(E.dim(s), 0);
                        ea[a] = 1;
                        FpVec w = M.act(aM, s, ea, t, v);
                        if (fpvec_is_zero(w)) continue;
                        auto cur = span_basis(span[u - lo], M.dim(u), p);
                        if (!in_span(cur, w, p)) {
                            span[u - lo].push_back(w);
                            changed = true;
                        }
                    }
                }
        }
    }
    Submodule S;
    S.basis.resize(hi - lo + 1);
    for (int t = lo; t <= hi; ++t) S.basis[t - lo] = span_basis(span[t - lo], M.dim(t), p);
    S.mod.p = p;
    S.mod.gd = GradedDims(lo, hi);
    S.mod.labels.resize(hi - lo + 1);
    for (int t = lo; t <= hi; ++t) {
        S.mod.gd.set_dim(t, (int)S.basis[t - lo].size());
        for (std::size_t k = 0; k < S.basis[t - lo].size(); ++k)
            S.mod.labels[t - lo].push_back("s" + std::to_string(t) + "_" + std::to_string(k));
    }
    ModuleAction act;
    act.left = false;
    act.A = &E;
    act.tab.resize(E.gd.dims.size());
    for (int s = E.gd.lo; s <= E.gd.hi; ++s) {
        act.tab[s - E.gd.lo].resize(hi - lo + 1);
        for (int t = lo; t <= hi; ++t) {
            int u = t + s;
            if (u < lo || u > hi) continue;
            auto& tab = act.tab[s - E.gd.lo][t - lo];
            tab.assign((std::size_t)E.dim(s) * S.mod.dim(t), FpVec(S.mod.dim(u), 0));
            for (int a = 0; a < E.dim(s); ++a) {
                FpVec ea(E.dim(s), 0);
                ea[a] = 1;
                for (int m = 0; m < S.mod.dim(t); ++m) {
                    FpVec w = M.act(aM, s, ea, t, S.basis[t - lo][m]);
                    tab[(std::size_t)a * S.mod.dim(t) + m] =
                        coords_in_rref_basis(S.basis[u - lo], w, p);
                }
            }
        }
    }
    S.mod.actions.push_back(std::move(act));
    return S;
}

inline std::vector<FpMatrix> submodule_inclusion(const Submodule& S, const GradedModule& M) {
    std::vector<FpMatrix> incl;
    for (int t = M.gd.lo; t <= M.gd.hi; ++t) {
        FpMatrix m(M.dim(t), S.mod.dim(t), M.p);
        for (int k = 0; k < S.mod.dim(t); ++k)
            for (int r = 0; r < M.dim(t); ++r) m.set(r, k, S.basis[t - M.gd.lo][k][r]);
        incl.push_back(std::move(m));
    }
    return incl;
}

// free cover on one generator per basis element of M; returns (F, cover mats)
struct FreeCover {
    GradedModule F;
    std::vector<FpMatrix> cover;  // per degree of F's window
};

inline FreeCover free_cover(const GradedModule& M, std::size_t aM) {
    const GradedAlgebra& E = *M.actions[aM].A;
    std::vector<std::pair<int, std::string>> gens;
    struct GenRef { int deg, idx; };
    std::vector<GenRef> refs;
    for (int t = M.gd.lo; t <= M.gd.hi; ++t)
        for (int m = 0; m < M.dim(t); ++m) {
            gens.push_back({t, "g" + std::to_string(t) + "_" + std::to_string(m)});
            refs.push_back({t, m});
        }
    int lo = M.gd.lo, hi = M.gd.hi;
    FreeCover out;
    out.F = free_module(E, false, gens, lo, hi);
    // basis of F at degree u: (gen g, a in E^{u - deg g}) ordered by g then a
    for (int u = lo; u <= hi; ++u) {
        FpMatrix cm(M.dim(u), out.F.dim(u), M.p);
        int col = 0;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            int ai = u - gens[g].first;
            if (!E.gd.in_window(ai)) continue;
            for (int a = 0; a < E.dim(ai); ++a, ++col) {
                FpVec ea(E.dim(ai), 0);
                ea[a] = 1;
                FpVec em(M.dim(refs[g].deg), 0);
                em[refs[g].idx] = 1;
                FpVec w = M.act(aM, ai, ea, refs[g].deg, em);
                for (int r = 0; r < M.dim(u); ++r) cm.set(r, col, w[r]);
            }
        }
        out.cover.push_back(std::move(cm));
    }
    return out;
}

}  // namespace dgdual
