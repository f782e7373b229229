#pragma once

#include "dgdual/duality.hpp"

namespace dgdual {

// dualize a degree-0 map phi: M -> N into delta(phi): delta(N) -> delta(M);
// at delta-degree i this is the transpose of phi at degree d-i
inline std::vector<FpMatrix> delta_of_map(const std::vector<FpMatrix>& mats, int srcLo, int d,
                                          int dlo, int dhi) {
    std::vector<FpMatrix> out;
    for (int i = dlo; i <= dhi; ++i) out.push_back(mat_transpose(mats[(d - i) - srcLo]));
    return out;
}

struct ExactnessReport {
    bool dual_maps_are_module_maps = false;
    bool composite_zero = false;
    bool exact_at_ends = false;
    bool exact_in_middle = false;
    bool ok() const {
        return dual_maps_are_module_maps && composite_zero && exact_at_ends && exact_in_middle;
    }
};

// exactness of the dual of 0 -> K -> F -> M -> 0 under delta_gr
inline ExactnessReport check_delta_exact_on_ses(const GradedModule& K,
                                                const std::vector<FpMatrix>& incl,
                                                const GradedModule& F,
                                                const std::vector<FpMatrix>& cover,
                                                const GradedModule& M,
                                                const GradedAntiInvolution& sigma, int d) {
    ExactnessReport rep;
    int lo = F.gd.lo, hi = F.gd.hi;
    GradedModule DK = delta_gr(K, 0, sigma, d);
    GradedModule DF = delta_gr(F, 0, sigma, d);
    GradedModule DM = delta_gr(M, 0, sigma, d);
    int dlo = d - hi, dhi = d - lo;
    auto Dcover = delta_of_map(cover, lo, d, dlo, dhi);  // DM -> DF
    auto Dincl = delta_of_map(incl, lo, d, dlo, dhi);    // DF -> DK

    rep.dual_maps_are_module_maps = is_module_map(DM, 0, DF, 0, Dcover, dlo, dhi) &&
                                    is_module_map(DF, 0, DK, 0, Dincl, dlo, dhi);

    rep.composite_zero = true;
    rep.exact_at_ends = true;
    rep.exact_in_middle = true;
    for (int i = dlo; i <= dhi; ++i) {
        const FpMatrix& dc = Dcover[i - dlo];
        const FpMatrix& di = Dincl[i - dlo];
        FpMatrix comp = mat_mul(di, dc);
        if (!fpvec_is_zero(comp.a)) rep.composite_zero = false;
        std::size_t rc = rank(dc), ri = rank(di);
        if (rc != (std::size_t)DM.dim(i)) rep.exact_at_ends = false;  // dual of surjection
        if (ri != (std::size_t)DK.dim(i)) rep.exact_at_ends = false;  // dual of injection
        if (rc + ri != (std::size_t)DF.dim(i)) rep.exact_in_middle = false;
    }
    return rep;
}

// does every module map A -> N extend along the inclusion A -> B?
inline bool extensions_exist(const GradedModule& A, const std::vector<FpMatrix>& incl,
                             const GradedModule& B, std::size_t aB, const GradedModule& N,
                             std::size_t aN, int lo, int hi) {
    long long p = A.p;
    auto psis = hom_module_basis(A, 0, N, aN, lo, hi);
    auto offset = hom_unknown_offsets(B, N, lo, hi);
    std::size_t nunk = offset[hi - lo + 1];
    auto linrows = hom_linearity_rows(B, aB, N, aN, lo, hi);
    for (const auto& psi : psis) {
        std::vector<FpVec> rows = linrows;
        FpVec rhs(linrows.size(), 0);
        // restriction: phi_t(incl(e_a)) = psi_t(e_a)
        for (int t = lo; t <= hi; ++t)
            for (int a = 0; a < A.dim(t); ++a) {
                FpVec ea(A.dim(t), 0);
                ea[a] = 1;
                FpVec ia = mat_vec(incl[t - lo], ea);
                for (int r = 0; r < N.dim(t); ++r) {
                    FpVec row(nunk, 0);
                    for (int x = 0; x < B.dim(t); ++x)
                        if (ia[x] != 0) row[offset[t - lo] + (std::size_t)r * B.dim(t) + x] = ia[x];
                    rows.push_back(std::move(row));
                    rhs.push_back(psi[t - lo].at(r, a));
                }
            }
        auto sol = solve(FpMatrix::from_rows(rows, nunk, p), rhs);
        if (!sol.has_value()) return false;
    }
    return true;
}

// --- the maindual isomorphism search -------------------------------------------

struct MaindualReport {
    enum class Status { IsoFound, DimMismatch, NoIsoCertified, NotFoundSampled };
    Status status = Status::DimMismatch;
    int witness_degree = 0;             // for DimMismatch
    std::size_t hom_space_dim = 0;
    std::size_t candidates_checked = 0;
    bool exhaustive = false;
    unsigned long long seed = 0;
    std::vector<FpMatrix> iso;          // per degree when found

    bool found() const { return status == Status::IsoFound; }
};

namespace detail {
struct XorShift64 {
    unsigned long long s;
    explicit XorShift64(unsigned long long seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    unsigned long long next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
};
}  // namespace detail

// search for a degree-0 E-linear isomorphism Mdual -> delta_gr(M)
inline MaindualReport check_maindual(const GradedModule& Mdual, std::size_t aMd,
                                     const GradedModule& M, std::size_t aM,
                                     const GradedAntiInvolution& sigma, int d,
                                     unsigned long long seed = 12345,
                                     std::size_t exhaust_limit = 531441 /* 3^12 */,
                                     std::size_t sample_count = 10000) {
    MaindualReport rep;
    rep.seed = seed;
    long long p = M.p;
    GradedModule DM = delta_gr(M, aM, sigma, d);
    int lo = std::min(Mdual.gd.lo, DM.gd.lo), hi = std::max(Mdual.gd.hi, DM.gd.hi);
    for (int i = lo; i <= hi; ++i)
        if (Mdual.dim(i) != DM.dim(i)) {
            rep.status = MaindualReport::Status::DimMismatch;
            rep.witness_degree = i;
            return rep;
        }
    auto basis = hom_module_basis(Mdual, aMd, DM, 0, lo, hi);
    std::size_t k = basis.size();
    rep.hom_space_dim = k;

    auto assemble = [&](const std::vector<long long>& coeffs) {
        std::vector<FpMatrix> mats;
        for (int t = lo; t <= hi; ++t) {
            FpMatrix m(DM.dim(t), Mdual.dim(t), p);
            for (std::size_t j = 0; j < k; ++j)
                if (coeffs[j] != 0) m = mat_add(m, mat_scale(coeffs[j], basis[j][t - lo]));
            mats.push_back(std::move(m));
        }
        return mats;
    };
    auto invertible = [&](const std::vector<FpMatrix>& mats) {
        for (const auto& m : mats)
            if (m.rows > 0 && !mat_inverse(m).has_value()) return false;
        return true;
    };

    if (k == 0) {
        bool all_zero = true;
        for (int i = lo; i <= hi; ++i)
            if (DM.dim(i) != 0) all_zero = false;
        rep.exhaustive = true;
        rep.status = all_zero ? MaindualReport::Status::IsoFound
                              : MaindualReport::Status::NoIsoCertified;
        return rep;
    }

    double total = 1;
    for (std::size_t j = 0; j < k; ++j) total *= (double)p;
    if (total <= (double)exhaust_limit) {
        std::vector<long long> coeffs(k, 0);
        std::size_t checked = 0;
        while (true) {
            ++checked;
            if (!std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; })) {
                auto mats = assemble(coeffs);
                if (invertible(mats)) {
                    rep.status = MaindualReport::Status::IsoFound;
                    rep.iso = std::move(mats);
                    rep.candidates_checked = checked;
                    rep.exhaustive = true;
                    return rep;
                }
            }
            int j = (int)k - 1;
            while (j >= 0 && coeffs[j] == p - 1) coeffs[j--] = 0;
            if (j < 0) break;
            ++coeffs[j];
        }
        rep.status = MaindualReport::Status::NoIsoCertified;
        rep.candidates_checked = checked;
        rep.exhaustive = true;
        return rep;
    }

    detail::XorShift64 rng(seed);
    for (std::size_t trial = 0; trial < sample_count; ++trial) {
        std::vector<long long> coeffs(k);
        for (auto& c : coeffs) c = (long long)(rng.next() % (unsigned long long)p);
        if (std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; })) continue;
        auto mats = assemble(coeffs);
        if (invertible(mats)) {
            rep.status = MaindualReport::Status::IsoFound;
            rep.iso = std::move(mats);
            rep.candidates_checked = trial + 1;
            return rep;
        }
    }
    rep.status = MaindualReport::Status::NotFoundSampled;
    rep.candidates_checked = sample_count;
    return rep;
}

}  // namespace dgdual
