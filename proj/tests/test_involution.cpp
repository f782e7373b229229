#include <catch2/catch_amalgamated.hpp>

#include "dgdual/induction.hpp"

using namespace dgdual;

namespace {

struct Pair22 {
    FinGroupDatum G;
    Rep k;
    InducedRep X;  // ind_U^G(k)
    Pair22(FinGroupDatum g, long long p) : G(std::move(g)), k(Rep::trivial(G, p)) {
        k.G = &G;
        X = induce(G, k);
    }
};

FpMatrix constants_inclusion(const InducedRep& X) {
    // k -> Ind(k), 1 -> the constant function 1
    FpMatrix D(X.dim(), 1, X.rep.p);
    for (int c = 0; c < X.ncosets(); ++c) D.set(c, 0, 1);
    return D;
}

FpMatrix augmentation(const InducedRep& X) {
    // ind(k) -> k, phi -> sum of values
    FpMatrix A(1, X.dim(), X.rep.p);
    for (int c = 0; c < X.ncosets(); ++c) A.set(0, c, 1);
    return A;
}

}  // namespace

TEST_CASE("J fixes the constant-functions inclusion") {
    Pair22 P(make_s3(), 2);
    auto D = constants_inclusion(P.X);
    REQUIRE(involution_J(P.X, P.k, D) == D);
}

TEST_CASE("J is involutive on a full Hom basis (S3 and C4 pairs)") {
    for (auto& P : {Pair22(make_s3(), 2), Pair22(make_cyclic(4, {0, 2}), 3)}) {
        auto homs = hom_basis_U(P.k, P.X.rep);
        REQUIRE(!homs.empty());
        for (const auto& a : homs) {
            auto Ja = involution_J(P.X, P.k, a);
            REQUIRE(is_equivariant(P.k, P.X.rep, Ja, P.G.U));
            REQUIRE(involution_J(P.X, P.k, Ja) == a);
        }
    }
}

TEST_CASE("J swaps supports UhU <-> Uh^-1U") {
    Pair22 P(make_s3(), 2);
    int h = s3_t02(P.G);
    auto homs = hom_basis_U(P.k, P.X.rep);
    auto dmap = P.G.double_coset_index_map();
    for (const auto& a : homs) {
        auto ah = component_on(P.X, a, h);
        if (fpvec_is_zero(ah.a)) continue;
        auto Jah = involution_J(P.X, P.k, ah);
        for (int idx : support_of(P.X, Jah)) REQUIRE(idx == dmap[P.G.i(h)]);
    }
}

TEST_CASE("J rejects non-equivariant input") {
    Pair22 P(make_s3(), 2);
    FpMatrix bad(P.X.dim(), 1, 2);
    bad.set(1, 0, 1);  // indicator of a non-U coset is not U-equivariant
    REQUIRE(!is_equivariant(P.k, P.X.rep, bad, P.G.U));
    REQUIRE_THROWS(involution_J(P.X, P.k, bad));
}

TEST_CASE("Shapiro at h = id is evaluation at the identity") {
    Pair22 P(make_s3(), 2);
    auto homs = hom_basis_U(P.k, P.X.rep);
    for (const auto& a : homs) {
        auto aid = component_on(P.X, a, P.G.id);
        auto sh = shapiro(P.X, P.k, P.G.id, aid);
        REQUIRE(sh.rows == 1);
        FpVec v = P.X.eval(aid.col(0), P.G.id);
        REQUIRE(sh.at(0, 0) == v[0]);
    }
}

TEST_CASE("Shapiro square: Sh_{h^-1} o J = h_* o Sh_h") {
    Pair22 P(make_s3(), 2);
    int h = s3_t02(P.G);
    auto homs = hom_basis_U(P.k, P.X.rep);
    for (const auto& a : homs) {
        auto ah = component_on(P.X, a, h);
        auto lhs = shapiro(P.X, P.k, P.G.i(h), involution_J(P.X, P.k, ah));
        auto rhs = push_h(P.k, P.k, h, shapiro(P.X, P.k, h, ah));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("Shapiro is bijective: Sh_h o Sh_h^-1 = id and back") {
    Pair22 P(make_s3(), 2);
    for (int h : P.G.double_coset_reps()) {
        auto homs = hom_basis_U(P.k, P.X.rep);
        for (const auto& a : homs) {
            auto ah = component_on(P.X, a, h);
            auto sh = shapiro(P.X, P.k, h, ah);
            REQUIRE(shapiro_inv(P.X, P.k, h, sh) == ah);
        }
        // and the other composite, from an arbitrary U_h-map
        FpMatrix beta(1, 1, 2);
        beta.set(0, 0, 1);
        auto lift = shapiro_inv(P.X, P.k, h, beta);
        REQUIRE(shapiro(P.X, P.k, h, lift) == beta);
    }
}

TEST_CASE("shapiro rejects maps with the wrong support") {
    Pair22 P(make_s3(), 2);
    auto D = constants_inclusion(P.X);  // supported everywhere
    REQUIRE_THROWS(shapiro(P.X, P.k, P.G.id, D));
}

TEST_CASE("rec and rec_inv are mutually inverse on full bases") {
    Pair22 P(make_s3(), 2);
    auto homs = hom_basis_U(P.k, P.X.rep);  // Hom_U(V2=k, Ind V1=k)
    for (const auto& a : homs) {
        auto r = rec_map(P.X, P.X, a);
        REQUIRE(is_equivariant(P.X.rep, P.k, r, P.G.U));
        REQUIRE(rec_inv(P.X, P.X, r) == a);
    }
    auto lams = hom_basis_U(P.X.rep, P.k);
    for (const auto& l : lams) {
        auto a = rec_inv(P.X, P.X, l);
        REQUIRE(rec_map(P.X, P.X, a) == l);
    }
}

TEST_CASE("rec of the constants inclusion is the augmentation") {
    Pair22 P(make_s3(), 2);
    REQUIRE(rec_map(P.X, P.X, constants_inclusion(P.X)) == augmentation(P.X));
}

TEST_CASE("rec of zero is zero") {
    Pair22 P(make_s3(), 2);
    FpMatrix z(P.X.dim(), 1, 2);
    REQUIRE(fpvec_is_zero(rec_map(P.X, P.X, z).a));
}

TEST_CASE("J' is involutive and equals rec o J o rec_inv") {
    for (auto& P : {Pair22(make_s3(), 2), Pair22(make_cyclic(4, {0, 2}), 3)}) {
        auto lams = hom_basis_U(P.X.rep, P.k);
        for (const auto& l : lams) {
            auto Jl = involution_Jprime(P.X, P.k, l);
            REQUIRE(involution_Jprime(P.X, P.k, Jl) == l);
            auto via_rec = rec_map(P.X, P.X, involution_J(P.X, P.k, rec_inv(P.X, P.X, l)));
            REQUIRE(Jl == via_rec);
        }
    }
}

TEST_CASE("J' fixes the augmentation") {
    Pair22 P(make_s3(), 2);
    auto aug = augmentation(P.X);
    REQUIRE(involution_Jprime(P.X, P.k, aug) == aug);
}

TEST_CASE("refined pairing against the constants inclusion is the identity") {
    Pair22 P(make_s3(), 2);
    auto D = constants_inclusion(P.X);
    REQUIRE(pairing_with(P.X, P.X, D) == FpMatrix::identity(P.X.dim(), 2));
    auto Cs = hom_basis_U(P.X.rep, P.k);
    for (const auto& C : Cs) REQUIRE(refined_pairing(P.X, P.X, C, D) == C);
}

TEST_CASE("refined pairing with a zero side is zero") {
    Pair22 P(make_s3(), 2);
    auto D = constants_inclusion(P.X);
    FpMatrix zC(1, P.X.dim(), 2);
    REQUIRE(fpvec_is_zero(refined_pairing(P.X, P.X, zC, D).a));
    FpMatrix zD(P.X.dim(), 1, 2);
    auto Cs = hom_basis_U(P.X.rep, P.k);
    REQUIRE(fpvec_is_zero(refined_pairing(P.X, P.X, Cs[0], zD).a));
}

TEST_CASE("pairing map phi -> <phi, D> is U-equivariant for every D") {
    Pair22 P(make_s3(), 2);
    for (const auto& D : hom_basis_U(P.k, P.X.rep)) {
        auto m = pairing_with(P.X, P.X, D);
        REQUIRE(is_equivariant(P.X.rep, P.X.rep, m, P.G.U));
    }
}

TEST_CASE("trace identity Tr<C,D> = C o D, exhaustively") {
    for (auto& P : {Pair22(make_s3(), 2), Pair22(make_cyclic(4, {0, 2}), 3)}) {
        auto Cs = hom_basis_U(P.X.rep, P.k);
        auto Ds = hom_basis_U(P.k, P.X.rep);
        for (const auto& C : Cs)
            for (const auto& D : Ds)
                REQUIRE(trace_Tr(P.X, refined_pairing(P.X, P.X, C, D)) == mat_mul(C, D));
    }
}

TEST_CASE("trace of zero is zero") {
    Pair22 P(make_s3(), 2);
    FpMatrix z(1, P.X.dim(), 2);
    REQUIRE(fpvec_is_zero(trace_Tr(P.X, z).a));
}

TEST_CASE("Frobenius maps: equivariance, trace = corestriction, J'-compatibility") {
    Pair22 P(make_s3(), 2);
    auto V = P.X.rep;  // a nontrivial G-representation
    int h = s3_t02(P.G);

    // U_h = {id}: any vector qualifies
    FpVec v(V.dim, 0);
    v[0] = 1;
    auto F = frobenius_Fr(P.X, h, V, v);
    REQUIRE(is_equivariant(P.X.rep, V, F, P.G.U));

    // Tr(Fr_h(v)) = sum over u in U/U_h of u v
    auto tr = trace_Tr(P.X, F);
    FpVec expect(V.dim, 0);
    for (int u : P.G.left_coset_reps_in_U(P.G.U_h(h))) {
        FpVec uv = mat_vec(V.act(u), v);
        for (int r = 0; r < V.dim; ++r) expect[r] = fp_add(expect[r], uv[r], 2);
    }
    REQUIRE(tr.col(0) == expect);

    // J'(Fr_h(v)) = Fr_{h^-1}(h^-1 v)
    auto lhs = involution_Jprime(P.X, V, F);
    auto rhs = frobenius_Fr(P.X, P.G.i(h), V, mat_vec(V.act(P.G.i(h)), v));
    REQUIRE(lhs == rhs);

    // h = id: Tr o Fr_id = identity on V^U
    auto invs = hom_basis_U(P.k, V);  // columns are U-fixed vectors
    for (const auto& w : invs) {
        auto Fid = frobenius_Fr(P.X, P.G.id, V, w.col(0));
        REQUIRE(trace_Tr(P.X, Fid).col(0) == w.col(0));
    }
}

TEST_CASE("Frobenius rejects vectors not fixed by U_h") {
    Pair22 P(make_s3(), 2);
    auto V = P.X.rep;
    FpVec v(V.dim, 0);
    v[1] = 1;  // indicator of a non-U coset is not U-fixed
    REQUIRE_THROWS(frobenius_Fr(P.X, P.G.id, V, v));
}

TEST_CASE("pairing diagram <J'F, G> = J'<F, JG> on full bases") {
    Pair22 P(make_s3(), 2);
    std::vector<Rep> targets = {P.k, P.X.rep};  // trivial and one nontrivial V3
    for (const auto& V3 : targets) {
        auto Fs = hom_basis_U(P.X.rep, V3);
        auto Gs = hom_basis_U(P.k, P.X.rep);
        for (const auto& F : Fs)
            for (const auto& Gm : Gs) {
                auto lhs = refined_pairing(P.X, P.X, involution_Jprime(P.X, V3, F), Gm);
                auto inner = refined_pairing(P.X, P.X, F, involution_J(P.X, P.k, Gm));
                auto rhs = involution_Jprime(P.X, V3, inner);
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("J' corresponds to the factor swap on maps out of X tensor X") {
    Pair22 P(make_s3(), 2);
    auto XX = tensor_rep(P.X.rep, P.X.rep);
    std::vector<Rep> targets = {P.k, P.X.rep};
    int nc = P.X.ncosets();
    int c0 = P.X.cosetIndex[P.G.id];

    // iota : X -> X tensor X, char_{gU} -> char_U tensor char_{gU}
    FpMatrix iota(XX.dim, nc, 2);
    for (int c = 0; c < nc; ++c) iota.set(c0 * nc + c, c, 1);

    // factor swap on X tensor X
    FpMatrix swap(XX.dim, XX.dim, 2);
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) swap.set(j * nc + i, i * nc + j, 1);

    for (const auto& V : targets) {
        auto Lams = hom_basis_G(XX, V);
        auto homsU = hom_basis_U(P.X.rep, V);
        REQUIRE(Lams.size() == homsU.size());  // the identification is bijective
        std::vector<FpVec> images;
        for (const auto& Lam : Lams) {
            auto lam = mat_mul(Lam, iota);
            images.push_back(lam.a);
            REQUIRE(involution_Jprime(P.X, V, lam) == mat_mul(mat_mul(Lam, swap), iota));
        }
        REQUIRE(span_rank(images, images.empty() ? 1 : images[0].size(), 2) == Lams.size());
    }
}

TEST_CASE("component split: components sum to the original and J swaps them") {
    Pair22 P(make_s3(), 2);
    auto homs = hom_basis_U(P.k, P.X.rep);
    auto dreps = P.G.double_coset_reps();
    for (const auto& a : homs) {
        FpMatrix sum(a.rows, a.cols, a.p);
        for (int h : dreps) sum = mat_add(sum, component_on(P.X, a, h));
        REQUIRE(sum == a);
        for (int h : dreps) {
            auto lhs = involution_J(P.X, P.k, component_on(P.X, a, h));
            auto rhs = component_on(P.X, involution_J(P.X, P.k, a), P.G.i(h));
            REQUIRE(lhs == rhs);
        }
    }
    // J' respects the domain-side decomposition the same way
    auto lams = hom_basis_U(P.X.rep, P.k);
    for (const auto& l : lams)
        for (int h : dreps) {
            auto lhs = involution_Jprime(P.X, P.k, component_on_domain(P.X, l, h));
            auto rhs = component_on_domain(P.X, involution_Jprime(P.X, P.k, l), P.G.i(h));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("single double coset means a single component") {
    Pair22 P(make_cyclic(3, {0, 1, 2}), 2);  // G = U
    auto homs = hom_basis_U(P.k, P.X.rep);
    REQUIRE(P.G.double_coset_reps().size() == 1);
    for (const auto& a : homs) REQUIRE(component_on(P.X, a, P.G.id) == a);
}
