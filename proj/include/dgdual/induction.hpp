#pragma once

#include <optional>
#include <vector>

#include "dgdual/rep.hpp"

namespace dgdual {

// Operations on U-equivariant maps in and out of induced representations.
// Maps are plain matrices; the carrying types say which spaces they join.
//
//   alpha : V1 -> Ind(V2)   dim(I) x dim(V1)
//   lambda: ind(V2) -> V1   dim(V1) x dim(I)
//
// V1, V2 are G-representations; equivariance is over U unless stated.

// J(alpha)(x)(g) = g^-1( alpha(g^-1 x)(g^-1) )
inline FpMatrix involution_J(const InducedRep& I, const Rep& V1, const FpMatrix& alpha) {
    const FinGroupDatum& G = *I.rep.G;
    if (!is_equivariant(V1, I.rep, alpha, G.U))
        throw std::invalid_argument("involution_J: input is not U-equivariant");
    FpMatrix out(I.dim(), V1.dim, V1.p);
    for (int m = 0; m < V1.dim; ++m) {
        FpVec em(V1.dim, 0);
        em[m] = 1;
        for (int c = 0; c < I.ncosets(); ++c) {
            int gi = I.cosetReps[c];
            int gii = G.i(gi);
            FpVec w = mat_vec(alpha, mat_vec(V1.act(gii), em));
            FpVec v = mat_vec(I.base->act(gii), I.eval(w, gii));
            for (int j = 0; j < I.baseDim; ++j) out.set(c * I.baseDim + j, m, v[j]);
        }
    }
    return out;
}

// support of alpha : V1 -> Ind(V2), as double-coset indices
inline std::vector<int> support_of(const InducedRep& I, const FpMatrix& alpha) {
    const FinGroupDatum& G = *I.rep.G;
    auto dmap = G.double_coset_index_map();
    auto reps = G.double_coset_reps();
    std::vector<char> hit(reps.size(), 0);
    for (int c = 0; c < I.ncosets(); ++c)
        for (int j = 0; j < I.baseDim; ++j)
            for (std::size_t m = 0; m < alpha.cols; ++m)
                if (alpha.at(c * I.baseDim + j, m) != 0) hit[dmap[I.cosetReps[c]]] = 1;
    std::vector<int> out;
    for (std::size_t k = 0; k < reps.size(); ++k)
        if (hit[k]) out.push_back((int)k);
    return out;
}

// component of alpha supported on the double coset of h (zero elsewhere)
inline FpMatrix component_on(const InducedRep& I, const FpMatrix& alpha, int h) {
    const FinGroupDatum& G = *I.rep.G;
    auto dmap = G.double_coset_index_map();
    int target = dmap[h];
    FpMatrix out(alpha.rows, alpha.cols, alpha.p);
    for (int c = 0; c < I.ncosets(); ++c)
        if (dmap[I.cosetReps[c]] == target)
            for (int j = 0; j < I.baseDim; ++j)
                for (std::size_t m = 0; m < alpha.cols; ++m)
                    out.set(c * I.baseDim + j, m, alpha.at(c * I.baseDim + j, m));
    return out;
}

// component of lambda : ind(V2) -> V1 supported on the double coset of h
inline FpMatrix component_on_domain(const InducedRep& I, const FpMatrix& lambda, int h) {
    const FinGroupDatum& G = *I.rep.G;
    auto dmap = G.double_coset_index_map();
    int target = dmap[h];
    FpMatrix out(lambda.rows, lambda.cols, lambda.p);
    for (int c = 0; c < I.ncosets(); ++c)
        if (dmap[I.cosetReps[c]] == target)
            for (int j = 0; j < I.baseDim; ++j)
                for (std::size_t r = 0; r < lambda.rows; ++r)
                    out.set(r, c * I.baseDim + j, lambda.at(r, c * I.baseDim + j));
    return out;
}

// Sh_h(alpha)(x) = alpha(x)(h), for alpha supported on UhU. Lands in
// Hom_{U_h}(V1, V2^h) where V2^h(w) = V2(h^-1 w h).
inline FpMatrix shapiro(const InducedRep& I, const Rep& V1, int h, const FpMatrix& alpha) {
    const FinGroupDatum& G = *I.rep.G;
    auto dmap = G.double_coset_index_map();
    for (int idx : support_of(I, alpha))
        if (idx != dmap[h])
            throw std::invalid_argument("shapiro: map not supported on UhU");
    FpMatrix out(I.baseDim, V1.dim, V1.p);
    for (int m = 0; m < V1.dim; ++m) {
        FpVec em(V1.dim, 0);
        em[m] = 1;
        FpVec v = I.eval(mat_vec(alpha, em), h);
        for (int j = 0; j < I.baseDim; ++j) out.set(j, m, v[j]);
    }
    return out;
}

// inverse Shapiro: beta in Hom_{U_h}(V1, V2^h) gives the map supported on
// UhU with value-at-(u1 h u2) = V2(u2)^-1 beta(V1(u1)^-1 x)
inline FpMatrix shapiro_inv(const InducedRep& I, const Rep& V1, int h, const FpMatrix& beta) {
    const FinGroupDatum& G = *I.rep.G;
    auto dmap = G.double_coset_index_map();
    FpMatrix out(I.dim(), V1.dim, V1.p);
    for (int c = 0; c < I.ncosets(); ++c) {
        int gi = I.cosetReps[c];
        if (dmap[gi] != dmap[h]) continue;
        int u1 = -1, u2 = -1;
        for (int a : G.U) {
            int t = G.m(G.i(a), gi);  // want gi = a h b  =>  b = h^-1 a^-1 gi
            int b = G.m(G.i(h), t);
            if (G.in_U(b)) { u1 = a; u2 = b; break; }
        }
        if (u1 < 0) throw std::logic_error("shapiro_inv: coset not in UhU");
        FpMatrix blockmap = mat_mul(I.base->act(G.i(u2)), mat_mul(beta, V1.act(G.i(u1))));
        for (int j = 0; j < I.baseDim; ++j)
            for (int m = 0; m < V1.dim; ++m)
                out.set(c * I.baseDim + j, m, blockmap.at(j, m));
    }
    return out;
}

// (h_* beta)(x) = h beta(h x)
inline FpMatrix push_h(const Rep& V1, const Rep& V2, int h, const FpMatrix& beta) {
    return mat_mul(V2.act(h), mat_mul(beta, V1.act(h)));
}

// rec(alpha)(phi) = sum_{g in G/U} alpha(phi(g))(g^-1),
// alpha : V2 -> Ind(V1), result : ind(V2) -> V1.
inline FpMatrix rec_map(const InducedRep& IndV1, const InducedRep& IndV2, const FpMatrix& alpha) {
    const FinGroupDatum& G = *IndV1.rep.G;
    const Rep& V1 = *IndV1.base;
    FpMatrix out(V1.dim, IndV2.dim(), V1.p);
    for (int c = 0; c < IndV2.ncosets(); ++c) {
        int gi = IndV2.cosetReps[c];
        for (int j = 0; j < IndV2.baseDim; ++j) {
            FpVec ej(IndV2.baseDim, 0);
            ej[j] = 1;
            FpVec v = IndV1.eval(mat_vec(alpha, ej), G.i(gi));
            for (int r = 0; r < V1.dim; ++r) out.set(r, c * IndV2.baseDim + j, v[r]);
        }
    }
    return out;
}

// rec^-1(beta)(v)(g) = beta(char_{g^-1,U}^v), beta : ind(V2) -> V1.
inline FpMatrix rec_inv(const InducedRep& IndV1, const InducedRep& IndV2, const FpMatrix& beta) {
    const FinGroupDatum& G = *IndV1.rep.G;
    FpMatrix out(IndV1.dim(), IndV2.baseDim, beta.p);
    for (int j = 0; j < IndV2.baseDim; ++j) {
        FpVec ej(IndV2.baseDim, 0);
        ej[j] = 1;
        for (int c = 0; c < IndV1.ncosets(); ++c) {
            int gi = IndV1.cosetReps[c];
            FpVec v = mat_vec(beta, IndV2.char_fn(G.i(gi), ej));
            for (int r = 0; r < IndV1.baseDim; ++r) out.set(c * IndV1.baseDim + r, j, v[r]);
        }
    }
    return out;
}

// J'(lambda)(phi) = sum_{g in G/U} g( lambda(char_{g^-1,U}^{g phi(g)}) ),
// lambda : ind(V2) -> V1.
inline FpMatrix involution_Jprime(const InducedRep& IndV2, const Rep& V1, const FpMatrix& lambda) {
    const FinGroupDatum& G = *IndV2.rep.G;
    const Rep& V2 = *IndV2.base;
    FpMatrix out(V1.dim, IndV2.dim(), V1.p);
    for (int c = 0; c < IndV2.ncosets(); ++c) {
        int gi = IndV2.cosetReps[c];
        for (int j = 0; j < IndV2.baseDim; ++j) {
            FpVec ej(IndV2.baseDim, 0);
            ej[j] = 1;
            FpVec arg = IndV2.char_fn(G.i(gi), mat_vec(V2.act(gi), ej));
            FpVec v = mat_vec(V1.act(gi), mat_vec(lambda, arg));
            for (int r = 0; r < V1.dim; ++r) out.set(r, c * IndV2.baseDim + j, v[r]);
        }
    }
    return out;
}

// <phi, D>(g) = D(g phi(g))(g) as a map ind(V1) -> ind(V2), for fixed
// D : V1 -> Ind(V2).
inline FpMatrix pairing_with(const InducedRep& IndV1, const InducedRep& IndV2, const FpMatrix& D) {
    const Rep& V1 = *IndV1.base;
    FpMatrix out(IndV2.dim(), IndV1.dim(), D.p);
    for (int c = 0; c < IndV1.ncosets(); ++c) {
        int gi = IndV1.cosetReps[c];
        for (int j = 0; j < IndV1.baseDim; ++j) {
            FpVec ej(IndV1.baseDim, 0);
            ej[j] = 1;
            FpVec val = IndV2.eval(mat_vec(D, mat_vec(V1.act(gi), ej)), gi);
            FpVec coords = IndV2.char_fn(gi, val);
            for (std::size_t r = 0; r < coords.size(); ++r)
                out.set(r, c * IndV1.baseDim + j, coords[r]);
        }
    }
    return out;
}

// <C, D>(phi) = C(<phi, D>) : ind(V1) -> V3
inline FpMatrix refined_pairing(const InducedRep& IndV1, const InducedRep& IndV2,
                                const FpMatrix& C, const FpMatrix& D) {
    return mat_mul(C, pairing_with(IndV1, IndV2, D));
}

// Tr(F)(v) = sum_{g in G/U} F(char_{g,U}^{g^-1 v}), F : ind(V1) -> V3.
inline FpMatrix trace_Tr(const InducedRep& IndV1, const FpMatrix& F) {
    const FinGroupDatum& G = *IndV1.rep.G;
    const Rep& V1 = *IndV1.base;
    FpMatrix out((int)F.rows, V1.dim, F.p);
    for (int m = 0; m < V1.dim; ++m) {
        FpVec em(V1.dim, 0);
        em[m] = 1;
        FpVec acc(F.rows, 0);
        for (int c = 0; c < IndV1.ncosets(); ++c) {
            int gi = IndV1.cosetReps[c];
            FpVec arg = IndV1.char_fn(gi, mat_vec(V1.act(G.i(gi)), em));
            FpVec v = mat_vec(F, arg);
            for (std::size_t r = 0; r < acc.size(); ++r) acc[r] = fp_add(acc[r], v[r], F.p);
        }
        for (std::size_t r = 0; r < acc.size(); ++r) out.set(r, m, acc[r]);
    }
    return out;
}

// Fr_h(v)(phi) = sum_{u in U/U_h} phi(uh) u v, on ind_U^{UhU}(k) extended by
// zero off UhU. Requires v fixed by U_h.
inline FpMatrix frobenius_Fr(const InducedRep& Xu, int h, const Rep& V, const FpVec& v) {
    const FinGroupDatum& G = *Xu.rep.G;
    if (Xu.baseDim != 1) throw std::invalid_argument("frobenius_Fr: induction base must be trivial");
    auto Uh = G.U_h(h);
    for (int w : Uh) {
        FpVec wv = mat_vec(V.act(w), v);
        if (wv != v) throw std::invalid_argument("frobenius_Fr: vector not fixed by U_h");
    }
    auto ureps = G.left_coset_reps_in_U(Uh);
    auto dmap = G.double_coset_index_map();
    FpMatrix out(V.dim, Xu.dim(), V.p);
    for (int c = 0; c < Xu.ncosets(); ++c) {
        int gi = Xu.cosetReps[c];
        if (dmap[gi] != dmap[h]) continue;
        int found = -1;
        for (int u : ureps)
            if (Xu.cosetIndex[G.m(u, h)] == c) { found = u; break; }
        if (found < 0) throw std::logic_error("frobenius_Fr: no coset match inside UhU");
        FpVec uv = mat_vec(V.act(found), v);
        for (int r = 0; r < V.dim; ++r) out.set(r, c, uv[r]);
    }
    return out;
}

// --- Hecke algebra ----------------------------------------------------------

// k[U\G/U] under convolution (f1*f2)(g) = sum_{xU in G/U} f1(x) f2(x^-1 g),
// basis = indicator functions of double cosets, unit = class of U.
struct HeckeAlgebra {
    const FinGroupDatum* G = nullptr;
    long long p = 2;
    std::vector<int> basisReps;            // double coset representatives
    std::vector<std::vector<FpVec>> mu;    // mu[a][b] = coefficients of T_a * T_b
    int unitIndex = 0;
    std::vector<int> J0;                   // anti-automorphism: T_{UhU} -> T_{Uh^-1U}

    int dim() const { return (int)basisReps.size(); }

    FpVec mul(const FpVec& x, const FpVec& y) const {
        FpVec out(dim(), 0);
        for (int a = 0; a < dim(); ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < dim(); ++b) {
                if (y[b] == 0) continue;
                long long c = fp_mul(x[a], y[b], p);
                fpvec_axpy(out, c, mu[a][b], p);
            }
        }
        return out;
    }

    FpVec apply_J0(const FpVec& x) const {
        FpVec out(dim(), 0);
        for (int a = 0; a < dim(); ++a) out[J0[a]] = x[a];
        return out;
    }
};

inline HeckeAlgebra hecke(const FinGroupDatum& G, long long p) {
    HeckeAlgebra H;
    H.G = &G;
    H.p = p;
    H.basisReps = G.double_coset_reps();
    auto dmap = G.double_coset_index_map();
    auto creps = G.coset_reps();
    int nd = H.dim();
    for (int k = 0; k < nd; ++k)
        if (dmap[G.id] == k) H.unitIndex = k;
    H.mu.assign(nd, std::vector<FpVec>(nd, FpVec(nd, 0)));
    for (int a = 0; a < nd; ++a)
        for (int b = 0; b < nd; ++b)
            for (int cidx = 0; cidx < nd; ++cidx) {
                // evaluate (T_a * T_b) at the representative of double coset cidx
                long long count = 0;
                int g = H.basisReps[cidx];
                for (int x : creps)
                    if (dmap[x] == a && dmap[G.m(G.i(x), g)] == b) ++count;
                H.mu[a][b][cidx] = fp_norm(count, p);
            }
    H.J0.resize(nd);
    for (int a = 0; a < nd; ++a) H.J0[a] = dmap[G.i(H.basisReps[a])];
    return H;
}

}  // namespace dgdual
