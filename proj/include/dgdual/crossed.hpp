#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "dgdual/graded.hpp"
#include "dgdual/group.hpp"

namespace dgdual {

// --- exterior-algebra combinatorics ------------------------------------------

// all size-i subsets of {0..d-1} in lexicographic order
inline std::vector<std::vector<int>> subsets_of_size(int d, int i) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == i) {
            out.push_back(cur);
            return;
        }
        for (int k = start; k < d; ++k) {
            cur.push_back(k);
            rec(k + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

inline int subset_index(const std::vector<std::vector<int>>& list, const std::vector<int>& s) {
    for (std::size_t k = 0; k < list.size(); ++k)
        if (list[k] == s) return (int)k;
    return -1;
}

// wedge of monomials y_S and y_T: zero on overlap, else signed union
inline bool wedge_subsets(const std::vector<int>& S, const std::vector<int>& T,
                          std::vector<int>& out, int& sign) {
    for (int s : S)
        for (int t : T)
            if (s == t) return false;
    int inv = 0;
    for (int s : S)
        for (int t : T)
            if (s > t) ++inv;
    out.clear();
    out.reserve(S.size() + T.size());
    std::merge(S.begin(), S.end(), T.begin(), T.end(), std::back_inserter(out));
    sign = (inv % 2 == 0) ? 1 : -1;
    return true;
}

inline std::string monomial_label(const std::vector<int>& S) {
    if (S.empty()) return "1";
    std::ostringstream os;
    for (int s : S) os << "y" << (s + 1);
    return os.str();
}

// Lambda(y_1..y_d) over F_p; degree-i piece has the size-i subsets as basis.
inline GradedAlgebra exterior_algebra(int d, long long p) {
    if (d < 1) throw std::invalid_argument("exterior_algebra: d >= 1 required");
    GradedAlgebra A;
    A.p = p;
    A.gd = GradedDims(0, d);
    A.labels.resize(d + 1);
    std::vector<std::vector<std::vector<int>>> bases(d + 1);
    for (int i = 0; i <= d; ++i) {
        bases[i] = subsets_of_size(d, i);
        A.gd.set_dim(i, (int)bases[i].size());
        for (const auto& S : bases[i]) A.labels[i].push_back(monomial_label(S));
    }
    A.prod.resize(d + 1);
    for (int i = 0; i <= d; ++i) {
        A.prod[i].resize(d + 1);
        for (int j = 0; j <= d; ++j) {
            if (i + j > d) continue;
            auto& tab = A.prod[i][j];
            tab.assign((std::size_t)A.dim(i) * A.dim(j), FpVec(A.dim(i + j), 0));
            for (int a = 0; a < A.dim(i); ++a)
                for (int b = 0; b < A.dim(j); ++b) {
                    std::vector<int> u;
                    int sgn;
                    if (!wedge_subsets(bases[i][a], bases[j][b], u, sgn)) continue;
                    int idx = subset_index(bases[i + j], u);
                    tab[(std::size_t)a * A.dim(j) + b][idx] = fp_norm(sgn, p);
                }
        }
    }
    A.unit = FpVec{1};
    return A;
}

// i-th exterior power of a d x d matrix: entries are minors det L[T|S].
inline FpMatrix compound_matrix(const FpMatrix& L, int i) {
    int d = (int)L.rows;
    auto subs = subsets_of_size(d, i);
    FpMatrix out(subs.size(), subs.size(), L.p);
    for (std::size_t col = 0; col < subs.size(); ++col)
        for (std::size_t row = 0; row < subs.size(); ++row) {
            FpMatrix minor(i, i, L.p);
            for (int r = 0; r < i; ++r)
                for (int c = 0; c < i; ++c) minor.set(r, c, L.at(subs[row][r], subs[col][c]));
            out.set(row, col, i == 0 ? 1 : mat_det(minor));
        }
    return out;
}

// --- the crossed-product model ------------------------------------------------

// (p, d, C, action matrices on H^1) defining G = Z_p^d x| C at desk scale.
struct CrossedModelDatum {
    long long p = 3;
    int d = 1;
    FinGroupDatum C;                    // finite group (subgroup field unused)
    std::vector<FpMatrix> actionOnH1;   // per C-element, invertible d x d

    void validate() const {
        if (!is_prime(p)) throw std::invalid_argument("model: p must be prime");
        if (d < 1) throw std::invalid_argument("model: d >= 1");
        if ((int)actionOnH1.size() != C.order)
            throw std::invalid_argument("model: one matrix per C-element required");
        for (const auto& m : actionOnH1)
            if (!mat_inverse(m).has_value())
                throw std::invalid_argument("model: action matrix not invertible");
        for (int a = 0; a < C.order; ++a)
            for (int b = 0; b < C.order; ++b)
                if (!(mat_mul(actionOnH1[a], actionOnH1[b]) == actionOnH1[C.m(a, b)]))
                    throw std::invalid_argument("model: action is not a homomorphism");
        if (!(actionOnH1[C.id] == FpMatrix::identity(d, p)))
            throw std::invalid_argument("model: identity must act trivially");
    }
};

struct Character {
    std::vector<long long> values;  // per C-element, nonzero mod p

    void validate(const FinGroupDatum& C, long long p) const {
        if (values[C.id] != 1) throw std::invalid_argument("character: not trivial at id");
        for (int a = 0; a < C.order; ++a) {
            if (values[a] == 0) throw std::invalid_argument("character: zero value");
            for (int b = 0; b < C.order; ++b)
                if (fp_mul(values[a], values[b], p) != values[C.m(a, b)])
                    throw std::invalid_argument("character: not multiplicative");
        }
    }
};

// Degree-preserving linear maps per degree of a graded algebra.
struct GradedAntiInvolution {
    const GradedAlgebra* A = nullptr;
    std::vector<FpMatrix> mats;  // per degree, aligned with A's window

    FpVec apply(int deg, const FpVec& v) const { return mat_vec(mats[deg - A->gd.lo], v); }

    bool is_involutive() const {
        for (int i = A->gd.lo; i <= A->gd.hi; ++i)
            if (!(mat_mul(mats[i - A->gd.lo], mats[i - A->gd.lo]) ==
                  FpMatrix::identity(A->dim(i), A->p)))
                return false;
        return true;
    }

    // sigma(xy) = (-1)^{|x||y|} sigma(y) sigma(x) on all homogeneous basis pairs
    bool is_koszul_anti_multiplicative() const {
        const GradedAlgebra& E = *A;
        for (int i = E.gd.lo; i <= E.gd.hi; ++i)
            for (int j = E.gd.lo; j <= E.gd.hi; ++j) {
                if (!E.gd.in_window(i + j)) continue;
                for (int a = 0; a < E.dim(i); ++a)
                    for (int b = 0; b < E.dim(j); ++b) {
                        FpVec lhs = apply(i + j, E.mul_basis(i, a, j, b));
                        FpVec ea(E.dim(i), 0), eb(E.dim(j), 0);
                        ea[a] = 1;
                        eb[b] = 1;
                        FpVec rhs = E.mul(j, apply(j, eb), i, apply(i, ea));
                        if ((i * j) % 2 != 0)
                            for (auto& x : rhs) x = fp_neg(x, E.p);
                        if (lhs != rhs) return false;
                    }
            }
        return true;
    }
};

// The assembled model: E* = Lambda(d) x| C by structure constants, with the
// C-action on Lambda through the contragredient of actionOnH1.
struct CrossedModel {
    CrossedModelDatum datum;
    GradedAlgebra Lambda;            // H^*(U, k)
    GradedAlgebra E;                 // the Yoneda algebra model
    std::vector<FpMatrix> L;         // contragredient action per C-element
    std::vector<std::vector<FpMatrix>> Lcompound;  // [c][deg]

    int nC() const { return datum.C.order; }
    int top() const { return datum.d; }

    // basis of E^i: (subset S, c) with index s * |C| + c
    int e_index(int i, int s, int c) const { return s * nC() + c; }
};

inline FpMatrix contragredient(const FpMatrix& m) {
    auto inv = mat_inverse(m);
    if (!inv) throw std::invalid_argument("contragredient: matrix not invertible");
    return mat_transpose(*inv);
}

inline CrossedModel build_crossed_model(const CrossedModelDatum& datum) {
    datum.validate();
    CrossedModel M;
    M.datum = datum;
    long long p = datum.p;
    int d = datum.d, nc = datum.C.order;
    M.Lambda = exterior_algebra(d, p);
    M.L.reserve(nc);
    for (const auto& a : datum.actionOnH1) M.L.push_back(contragredient(a));
    M.Lcompound.resize(nc);
    for (int c = 0; c < nc; ++c) {
        M.Lcompound[c].reserve(d + 1);
        for (int i = 0; i <= d; ++i) M.Lcompound[c].push_back(compound_matrix(M.L[c], i));
    }

    GradedAlgebra& E = M.E;
    E.p = p;
    E.gd = GradedDims(0, d);
    E.labels.resize(d + 1);
    for (int i = 0; i <= d; ++i) {
        E.gd.set_dim(i, M.Lambda.dim(i) * nc);
        for (int s = 0; s < M.Lambda.dim(i); ++s)
            for (int c = 0; c < nc; ++c)
                E.labels[i].push_back(M.Lambda.labels[i][s] + "|c" + std::to_string(c));
    }
    E.prod.resize(d + 1);
    for (int i = 0; i <= d; ++i) {
        E.prod[i].resize(d + 1);
        for (int j = 0; j <= d; ++j) {
            if (i + j > d) continue;
            auto& tab = E.prod[i][j];
            tab.assign((std::size_t)E.dim(i) * E.dim(j), FpVec(E.dim(i + j), 0));
            for (int s = 0; s < M.Lambda.dim(i); ++s)
                for (int c = 0; c < nc; ++c)
                    for (int t = 0; t < M.Lambda.dim(j); ++t)
                        for (int c2 = 0; c2 < nc; ++c2) {
                            // (y_S|c)(y_T|c2) = (y_S ^ L_c y_T)|c c2
                            FpVec Lt = M.Lcompound[c][j].col(t);
                            FpVec es(M.Lambda.dim(i), 0);
                            es[s] = 1;
                            FpVec prod = M.Lambda.mul(i, es, j, Lt);
                            int cc = datum.C.m(c, c2);
                            FpVec& out =
                                tab[(std::size_t)M.e_index(i, s, c) * E.dim(j) + M.e_index(j, t, c2)];
                            for (int u = 0; u < M.Lambda.dim(i + j); ++u)
                                out[M.e_index(i + j, u, cc)] = prod[u];
                        }
        }
    }
    E.unit.assign(E.dim(0), 0);
    E.unit[M.e_index(0, 0, datum.C.id)] = 1;
    E.validate();
    return M;
}

// chi_G(c) = the scalar by which c acts on the top exterior power.
inline Character duality_character(const CrossedModel& M) {
    Character chi;
    chi.values.resize(M.nC());
    for (int c = 0; c < M.nC(); ++c) {
        const FpMatrix& topc = M.Lcompound[c][M.top()];
        chi.values[c] = topc.at(0, 0);
    }
    chi.validate(M.datum.C, M.datum.p);
    return chi;
}

// J(y_S|c) = (L_{c^-1} y_S)|c^-1       (Koszul anti-involution, J^2 = id)
inline GradedAntiInvolution anti_involution_J(const CrossedModel& M) {
    GradedAntiInvolution J;
    J.A = &M.E;
    int d = M.top(), nc = M.nC();
    for (int i = 0; i <= d; ++i) {
        FpMatrix m(M.E.dim(i), M.E.dim(i), M.datum.p);
        for (int s = 0; s < M.Lambda.dim(i); ++s)
            for (int c = 0; c < nc; ++c) {
                int ci = M.datum.C.i(c);
                FpVec Ls = M.Lcompound[ci][i].col(s);
                for (int t = 0; t < M.Lambda.dim(i); ++t)
                    m.set(M.e_index(i, t, ci), M.e_index(i, s, c), Ls[t]);
            }
        J.mats.push_back(std::move(m));
    }
    return J;
}

// (J (x) chi)(y_S|c) = chi(c^-1) J(y_S|c)
inline GradedAntiInvolution twist_J_chi(const CrossedModel& M) {
    auto J = anti_involution_J(M);
    auto chi = duality_character(M);
    int d = M.top(), nc = M.nC();
    for (int i = 0; i <= d; ++i)
        for (int s = 0; s < M.Lambda.dim(i); ++s)
            for (int c = 0; c < nc; ++c) {
                long long f = chi.values[M.datum.C.i(c)];
                int col = M.e_index(i, s, c);
                for (std::size_t r = 0; r < J.mats[i].rows; ++r)
                    J.mats[i].set(r, col, fp_mul(f, J.mats[i].at(r, col), M.datum.p));
            }
    if (!J.is_involutive() || !J.is_koszul_anti_multiplicative())
        throw std::logic_error("twist_J_chi: twisted map lost the anti-involution property");
    return J;
}

// --- bundled models -----------------------------------------------------------

inline CrossedModelDatum model_p3_d1_c2() {
    CrossedModelDatum m;
    m.p = 3;
    m.d = 1;
    m.C = make_cyclic(2, {0});
    FpMatrix minus1(1, 1, 3);
    minus1.set(0, 0, 2);
    m.actionOnH1 = {FpMatrix::identity(1, 3), minus1};
    return m;
}

inline CrossedModelDatum model_p3_d2_c2() {
    CrossedModelDatum m;
    m.p = 3;
    m.d = 2;
    m.C = make_cyclic(2, {0});
    FpMatrix a(2, 2, 3);
    a.set(0, 0, 2);  // diag(-1, 1)
    a.set(1, 1, 1);
    m.actionOnH1 = {FpMatrix::identity(2, 3), a};
    return m;
}

inline CrossedModelDatum model_p2_d2_c3() {
    CrossedModelDatum m;
    m.p = 2;
    m.d = 2;
    m.C = make_cyclic(3, {0});
    FpMatrix a(2, 2, 2);  // order-3 element of GL_2(F_2)
    a.set(0, 1, 1);
    a.set(1, 0, 1);
    a.set(1, 1, 1);
    m.actionOnH1 = {FpMatrix::identity(2, 2), a, mat_mul(a, a)};
    return m;
}

inline CrossedModelDatum model_trivial_C(long long p, int d) {
    CrossedModelDatum m;
    m.p = p;
    m.d = d;
    m.C = make_cyclic(1, {0});
    m.actionOnH1 = {FpMatrix::identity(d, p)};
    return m;
}

}  // namespace dgdual
