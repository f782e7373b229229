#include <catch2/catch_amalgamated.hpp>

#include "dgdual/rep.hpp"

using namespace dgdual;

namespace {
FpVec basis_vec(int n, int i) {
    FpVec v(n, 0);
    v[i] = 1;
    return v;
}
}  // namespace

TEST_CASE("inducing the trivial rep of U in S3 gives a 3-dimensional rep") {
    auto g = make_s3();
    auto k = Rep::trivial(g, 2);
    auto X = induce(g, k);
    REQUIRE(X.dim() == 3);
    REQUIRE_NOTHROW(X.rep.validate());
}

TEST_CASE("G = U induces to the one-dimensional representation") {
    auto g = make_cyclic(3, {0, 1, 2});
    auto k = Rep::trivial(g, 5);
    auto X = induce(g, k);
    REQUIRE(X.dim() == 1);
}

TEST_CASE("C4 over C2: generator acts by the 2-cycle permutation") {
    auto g = make_cyclic(4, {0, 2});
    auto k = Rep::trivial(g, 3);
    auto X = induce(g, k);
    REQUIRE(X.dim() == 2);
    FpMatrix swap(2, 2, 3);
    swap.set(0, 1, 1);
    swap.set(1, 0, 1);
    REQUIRE(X.rep.act(1) == swap);
}

TEST_CASE("char functions translate: g . char_{h,U}^v = char_{gh,U}^v") {
    auto g = make_s3();
    auto k = Rep::trivial(g, 2);
    auto X = induce(g, k);
    FpVec one = {1};
    for (int a = 0; a < g.order; ++a)
        for (int h = 0; h < g.order; ++h) {
            FpVec lhs = mat_vec(X.rep.act(a), X.char_fn(h, one));
            FpVec rhs = X.char_fn(g.m(a, h), one);
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("char function with zero vector is zero") {
    auto g = make_s3();
    auto k = Rep::trivial(g, 2);
    auto X = induce(g, k);
    REQUIRE(fpvec_is_zero(X.char_fn(3, FpVec{0})));
}

TEST_CASE("char at the identity is the U-coset indicator") {
    auto g = make_s3();
    auto k = Rep::trivial(g, 2);
    auto X = induce(g, k);
    FpVec c = X.char_fn(g.id, FpVec{1});
    for (int a = 0; a < g.order; ++a) {
        FpVec val = X.eval(c, a);
        REQUIRE(val[0] == (g.in_U(a) ? 1 : 0));
    }
}

TEST_CASE("eval is consistent with the induced-function property") {
    // f(gu) = u^-1 f(g) with a nontrivial fiber: induce X_U itself
    auto g = make_s3();
    auto k = Rep::trivial(g, 3);
    auto X = induce(g, k);
    auto Y = induce(g, X.rep);  // ind of a 3-dimensional rep
    REQUIRE(Y.dim() == 9);
    FpVec f(Y.dim(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = (long long)(i % 3);
    for (int a = 0; a < g.order; ++a)
        for (int u : g.U) {
            FpVec lhs = Y.eval(f, g.m(a, u));
            FpVec rhs = mat_vec(X.rep.act(g.i(u)), Y.eval(f, a));
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("hom bases are equivariant and exhaustive") {
    auto g = make_s3();
    auto k = Rep::trivial(g, 2);
    auto X = induce(g, k);
    auto homs = hom_basis_U(k, X.rep);
    // Hom_U(k, X_U) = U-invariants of X_U = functions on U\G/U
    REQUIRE(homs.size() == g.double_coset_reps().size());
    for (const auto& M : homs) REQUIRE(is_equivariant(k, X.rep, M, g.U));
    auto gh = hom_basis_G(X.rep, X.rep);
    REQUIRE(gh.size() == g.double_coset_reps().size());  // End_G(X_U) = Hecke algebra
}

TEST_CASE("induce rejects a non-representation") {
    auto g = make_s3();
    Rep bad = Rep::trivial(g, 2);
    bad.action[g.U[1]] = mat_scale(0, bad.action[g.U[1]]);  // break U-multiplicativity
    REQUIRE_THROWS(induce(g, bad));
}

TEST_CASE("tensor of X_U with itself has the diagonal action") {
    auto g = make_s3();
    auto k = Rep::trivial(g, 2);
    auto X = induce(g, k);
    auto XX = tensor_rep(X.rep, X.rep);
    REQUIRE(XX.dim == 9);
    REQUIRE_NOTHROW(XX.validate());
    // spot check: (g.char_U) tensor (g.char_U) = g.(char_U tensor char_U)
    FpVec cu = X.char_coset(g.id);
    for (int a = 0; a < g.order; ++a) {
        FpVec lhs(9, 0);
        FpVec ga = mat_vec(X.rep.act(a), cu);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) lhs[i * 3 + j] = fp_mul(ga[i], ga[j], 2);
        FpVec cucu(9, 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) cucu[i * 3 + j] = fp_mul(cu[i], cu[j], 2);
        REQUIRE(mat_vec(XX.act(a), cucu) == lhs);
    }
    (void)basis_vec;
}
