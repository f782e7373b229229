#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dgdual/group.hpp"

namespace dgdual {

// A representation of G on F_p^dim, one action matrix per group element.
struct Rep {
    const FinGroupDatum* G = nullptr;
    long long p = 2;
    int dim = 0;
    std::vector<FpMatrix> action;  // indexed by group element

    const FpMatrix& act(int g) const { return action[g]; }

    void validate_on(const std::vector<int>& elems) const {
        for (int a : elems)
            for (int b : elems)
                if (!(mat_mul(action[a], action[b]) == action[G->m(a, b)]))
                    throw std::invalid_argument("rep: action is not multiplicative");
        if (!(action[G->id] == FpMatrix::identity(dim, p)))
            throw std::invalid_argument("rep: identity does not act trivially");
    }
    void validate() const {
        std::vector<int> all(G->order);
        for (int g = 0; g < G->order; ++g) all[g] = g;
        validate_on(all);
    }
    void validate_on_U() const { validate_on(G->U); }

    static Rep trivial(const FinGroupDatum& G, long long p) {
        Rep r;
        r.G = &G;
        r.p = p;
        r.dim = 1;
        r.action.assign(G.order, FpMatrix::identity(1, p));
        return r;
    }
};

// Induction of V (restricted to U) to G. Basis indexed by pairs
// (coset, base basis vector): index = coset * dim(V) + j. The stored
// functions f : G -> V satisfy f(gu) = u^-1 f(g).
struct InducedRep {
    Rep rep;                      // the induced G-representation
    const Rep* base = nullptr;    // V
    std::vector<int> cosetReps;   // least element per left coset gU
    std::vector<int> cosetIndex;  // element -> coset index
    int baseDim = 0;

    int ncosets() const { return (int)cosetReps.size(); }
    int dim() const { return rep.dim; }

    // value of the function with coordinates `coords` at the element g
    FpVec eval(const FpVec& coords, int g) const {
        const FinGroupDatum& G = *rep.G;
        int k = cosetIndex[g];
        int u = G.m(G.i(cosetReps[k]), g);  // g = rep_k * u
        FpVec block(coords.begin() + k * baseDim, coords.begin() + (k + 1) * baseDim);
        return mat_vec(base->act(G.i(u)), block);  // f(rep_k u) = u^-1 f(rep_k)
    }

    // char_{h,U}^v: the unique induced function supported on hU with value v at h
    FpVec char_fn(int h, const FpVec& v) const {
        const FinGroupDatum& G = *rep.G;
        int k = cosetIndex[h];
        int u = G.m(G.i(cosetReps[k]), h);  // h = rep_k * u
        FpVec coords(dim(), 0);
        FpVec blk = mat_vec(base->act(u), v);  // char_{rep_k u}^v = char_{rep_k}^{u v}
        for (int j = 0; j < baseDim; ++j) coords[k * baseDim + j] = blk[j];
        return coords;
    }

    // indicator of the coset (trivial-coefficient convenience)
    FpVec char_coset(int g) const {
        FpVec v(baseDim, 0);
        if (baseDim != 1) throw std::logic_error("char_coset needs a one-dimensional base");
        v[0] = 1;
        return char_fn(g, v);
    }
};

inline InducedRep induce(const FinGroupDatum& G, const Rep& V) {
    V.validate_on_U();  // reject non-U-equivariant input
    InducedRep I;
    I.base = &V;
    I.baseDim = V.dim;
    I.cosetReps = G.coset_reps();
    I.cosetIndex = G.coset_index_map();
    int nc = I.ncosets();
    I.rep.G = &G;
    I.rep.p = V.p;
    I.rep.dim = nc * V.dim;
    I.rep.action.assign(G.order, FpMatrix::zero(I.rep.dim, I.rep.dim, V.p));
    for (int g = 0; g < G.order; ++g) {
        FpMatrix& M = I.rep.action[g];
        for (int c = 0; c < nc; ++c) {
            int gi = I.cosetReps[c];
            int t = G.m(g, gi);
            int k = I.cosetIndex[t];
            int u = G.m(G.i(I.cosetReps[k]), t);  // g*rep_c = rep_k * u
            const FpMatrix& A = V.act(u);
            for (int j = 0; j < V.dim; ++j)
                for (int i2 = 0; i2 < V.dim; ++i2)
                    M.set(k * V.dim + i2, c * V.dim + j, A.at(i2, j));
        }
    }
    I.rep.validate();
    return I;
}

// Basis of the space of W-equivariant maps src -> tgt, where W is a list of
// group elements. Returned matrices are tgt.dim x src.dim; the ordering is
// the deterministic kernel ordering of the constraint system.
inline std::vector<FpMatrix> hom_basis(const Rep& src, const Rep& tgt,
                                       const std::vector<int>& W) {
    long long p = src.p;
    std::size_t n = (std::size_t)tgt.dim * src.dim;  // unknown M, row-major
    std::vector<FpVec> rows;
    for (int w : W) {
        const FpMatrix& A = tgt.act(w);
        const FpMatrix& B = src.act(w);
        // constraint A*M - M*B = 0, entry (i,j)
        for (int i = 0; i < tgt.dim; ++i)
            for (int j = 0; j < src.dim; ++j) {
                FpVec row(n, 0);
                for (int k = 0; k < tgt.dim; ++k)
                    row[k * src.dim + j] = fp_add(row[k * src.dim + j], A.at(i, k), p);
                for (int k = 0; k < src.dim; ++k)
                    row[i * src.dim + k] = fp_sub(row[i * src.dim + k], B.at(k, j), p);
                rows.push_back(std::move(row));
            }
    }
    std::vector<FpMatrix> out;
    if (rows.empty()) {
        for (std::size_t t = 0; t < n; ++t) {
            FpMatrix M(tgt.dim, src.dim, p);
            M.a[t] = 1;
            out.push_back(std::move(M));
        }
        return out;
    }
    auto ker = kernel_basis(FpMatrix::from_rows(rows, n, p));
    for (const auto& v : ker) {
        FpMatrix M(tgt.dim, src.dim, p);
        M.a = v;
        out.push_back(std::move(M));
    }
    return out;
}

inline std::vector<FpMatrix> hom_basis_U(const Rep& src, const Rep& tgt) {
    return hom_basis(src, tgt, src.G->U);
}

inline std::vector<FpMatrix> hom_basis_G(const Rep& src, const Rep& tgt) {
    std::vector<int> all(src.G->order);
    for (int g = 0; g < src.G->order; ++g) all[g] = g;
    return hom_basis(src, tgt, all);
}

inline bool is_equivariant(const Rep& src, const Rep& tgt, const FpMatrix& M,
                           const std::vector<int>& W) {
    for (int w : W)
        if (!(mat_mul(M, src.act(w)) == mat_mul(tgt.act(w), M))) return false;
    return true;
}

// The G-representation X_U tensor X_U with the diagonal action (basis
// (i,j) -> i * dim + j).
inline Rep tensor_rep(const Rep& V, const Rep& W) {
    Rep r;
    r.G = V.G;
    r.p = V.p;
    r.dim = V.dim * W.dim;
    r.action.reserve(V.G->order);
    for (int g = 0; g < V.G->order; ++g) {
        const FpMatrix& A = V.act(g);
        const FpMatrix& B = W.act(g);
        FpMatrix M(r.dim, r.dim, V.p);
        for (int i = 0; i < V.dim; ++i)
            for (int j = 0; j < W.dim; ++j)
                for (int k = 0; k < V.dim; ++k)
                    for (int l = 0; l < W.dim; ++l)
                        M.set(i * W.dim + j, k * W.dim + l,
                              fp_mul(A.at(i, k), B.at(j, l), V.p));
        r.action.push_back(std::move(M));
    }
    return r;
}

}  // namespace dgdual
