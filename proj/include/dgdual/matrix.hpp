#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dgdual/fp.hpp"

namespace dgdual {

using FpVec = std::vector<long long>;

inline FpVec fpvec_zero(std::size_t n) { return FpVec(n, 0); }

inline bool fpvec_is_zero(const FpVec& v) {
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

inline void fpvec_axpy(FpVec& y, long long c, const FpVec& x, long long p) {
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = fp_norm(y[i] + c * x[i], p);
}

// Dense matrix over F_p, row-major.
struct FpMatrix {
    std::size_t rows = 0, cols = 0;
    long long p = 2;
    FpVec a;  // rows*cols entries, reduced

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c, long long mod)
        : rows(r), cols(c), p(mod), a(r * c, 0) {}

    long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    void set(std::size_t i, std::size_t j, long long v) { a[i * cols + j] = fp_norm(v, p); }

    static FpMatrix identity(std::size_t n, long long p) {
        FpMatrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }
    static FpMatrix zero(std::size_t r, std::size_t c, long long p) { return FpMatrix(r, c, p); }

    static FpMatrix from_rows(const std::vector<FpVec>& rows_, std::size_t ncols, long long p) {
        FpMatrix m(rows_.size(), ncols, p);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, rows_[i][j]);
        return m;
    }
    static FpMatrix from_cols(const std::vector<FpVec>& cols_, std::size_t nrows, long long p) {
        FpMatrix m(nrows, cols_.size(), p);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (std::size_t i = 0; i < nrows; ++i) m.set(i, j, cols_[j][i]);
        return m;
    }

    FpVec row(std::size_t i) const { return FpVec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    FpVec col(std::size_t j) const {
        FpVec v(rows);
        for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }

    friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.p == y.p && x.a == y.a;
    }
};

inline FpMatrix mat_add(const FpMatrix& x, const FpMatrix& y) {
    FpMatrix r(x.rows, x.cols, x.p);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = fp_add(x.a[i], y.a[i], x.p);
    return r;
}

inline FpMatrix mat_sub(const FpMatrix& x, const FpMatrix& y) {
    FpMatrix r(x.rows, x.cols, x.p);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = fp_sub(x.a[i], y.a[i], x.p);
    return r;
}

inline FpMatrix mat_scale(long long c, const FpMatrix& x) {
    FpMatrix r(x.rows, x.cols, x.p);
    c = fp_norm(c, x.p);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = fp_mul(c, x.a[i], x.p);
    return r;
}

inline FpMatrix mat_mul(const FpMatrix& x, const FpMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    FpMatrix r(x.rows, y.cols, x.p);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            long long xv = x.at(i, k);
            if (xv == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                r.a[i * y.cols + j] = fp_norm(r.a[i * y.cols + j] + xv * y.at(k, j), x.p);
        }
    return r;
}

inline FpVec mat_vec(const FpMatrix& m, const FpVec& v) {
    if (m.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    FpVec r(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        long long s = 0;
        for (std::size_t j = 0; j < m.cols; ++j) s = fp_norm(s + m.at(i, j) * v[j], m.p);
        r[i] = s;
    }
    return r;
}

inline FpMatrix mat_transpose(const FpMatrix& m) {
    FpMatrix r(m.cols, m.rows, m.p);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r.set(j, i, m.at(i, j));
    return r;
}

// Reduced row echelon form with deterministic first-nonzero pivoting.
// Returns the reduced matrix and the strictly increasing pivot columns.
inline std::pair<FpMatrix, std::vector<std::size_t>> rref(const FpMatrix& min) {
    FpMatrix m = min;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = m.rows;
        for (std::size_t i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { sel = i; break; }
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) {
                long long t = m.a[sel * m.cols + j];
                m.a[sel * m.cols + j] = m.a[r * m.cols + j];
                m.a[r * m.cols + j] = t;
            }
        long long inv = fp_inv(m.at(r, c), m.p);
        for (std::size_t j = 0; j < m.cols; ++j) m.set(r, j, fp_mul(inv, m.at(r, j), m.p));
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            long long f = m.at(i, c);
            if (f == 0) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                m.set(i, j, fp_sub(m.at(i, j), fp_mul(f, m.at(r, j), m.p), m.p));
        }
        pivots.push_back(c);
        ++r;
    }
    return {m, pivots};
}

inline std::size_t rank(const FpMatrix& m) { return rref(m).second.size(); }

// Basis of the right null space, as column vectors. One vector per free
// column, in increasing column order.
inline std::vector<FpVec> kernel_basis(const FpMatrix& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<FpVec> out;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_piv[fc]) continue;
        FpVec v(m.cols, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = fp_neg(r.at(i, fc), m.p);
        out.push_back(std::move(v));
    }
    return out;
}

// Solves m*x = b; nullopt when inconsistent.
inline std::optional<FpVec> solve(const FpMatrix& m, const FpVec& b) {
    if (b.size() != m.rows) throw std::invalid_argument("solve: rhs length mismatch");
    FpMatrix aug(m.rows, m.cols + 1, m.p);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols, b[i]);
    }
    auto [r, piv] = rref(aug);
    for (auto c : piv)
        if (c == m.cols) return std::nullopt;
    FpVec x(m.cols, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols);
    return x;
}

inline std::optional<FpMatrix> mat_inverse(const FpMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    std::size_t n = m.rows;
    FpMatrix aug(n, 2 * n, m.p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, n + i, 1);
    }
    auto [r, piv] = rref(aug);
    if (piv.size() != n || piv.back() != n - 1) {
        for (std::size_t i = 0; i < piv.size(); ++i)
            if (piv[i] != i) return std::nullopt;
        if (piv.size() != n) return std::nullopt;
    }
    FpMatrix inv(n, n, m.p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.set(i, j, r.at(i, n + j));
    return inv;
}

inline long long mat_det(const FpMatrix& min) {
    if (min.rows != min.cols) throw std::invalid_argument("mat_det: not square");
    FpMatrix m = min;
    long long det = 1 % m.p;
    std::size_t n = m.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t i = c; i < n; ++i)
            if (m.at(i, c) != 0) { sel = i; break; }
        if (sel == n) return 0;
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.a[sel * n + j], m.a[c * n + j]);
            det = fp_neg(det, m.p);
        }
        det = fp_mul(det, m.at(c, c), m.p);
        long long inv = fp_inv(m.at(c, c), m.p);
        for (std::size_t i = c + 1; i < n; ++i) {
            long long f = fp_mul(m.at(i, c), inv, m.p);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j)
                m.set(i, j, fp_sub(m.at(i, j), fp_mul(f, m.at(c, j), m.p), m.p));
        }
    }
    return det;
}

// dim of the span of a list of vectors.
inline std::size_t span_rank(const std::vector<FpVec>& vecs, std::size_t n, long long p) {
    if (vecs.empty()) return 0;
    return rank(FpMatrix::from_rows(vecs, n, p));
}

// Row-basis of the span in rref form; canonical representatives.
inline std::vector<FpVec> span_basis(const std::vector<FpVec>& vecs, std::size_t n, long long p) {
    if (vecs.empty()) return {};
    auto [r, piv] = rref(FpMatrix::from_rows(vecs, n, p));
    std::vector<FpVec> out;
    for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
    return out;
}

// Is v in the span of the given rref row-basis?
inline bool in_span(const std::vector<FpVec>& rref_basis, const FpVec& v, long long p) {
    FpVec w = v;
    for (const auto& b : rref_basis) {
        std::size_t lead = 0;
        while (lead < b.size() && b[lead] == 0) ++lead;
        if (lead == b.size()) continue;
        if (w[lead] != 0) fpvec_axpy(w, fp_neg(w[lead], p), b, p);
    }
    return fpvec_is_zero(w);
}

}  // namespace dgdual
