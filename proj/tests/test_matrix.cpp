#include <catch2/catch_amalgamated.hpp>

#include "dgdual/matrix.hpp"

using namespace dgdual;

TEST_CASE("field axioms hold for small primes") {
    for (long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        for (long long a = 0; a < p; ++a) {
            FpScalar x(a, p);
            REQUIRE((x + FpScalar(0, p)) == x);
            REQUIRE((x * FpScalar(1, p)) == x);
            REQUIRE((x + (-x)).value == 0);
            if (a != 0) REQUIRE((x * x.inv()).value == 1);
            for (long long b = 0; b < p; ++b) {
                FpScalar y(b, p);
                REQUIRE((x + y) == (y + x));
                REQUIRE((x * y) == (y * x));
                for (long long c = 0; c < p; ++c) {
                    FpScalar z(c, p);
                    REQUIRE(((x + y) + z) == (x + (y + z)));
                    REQUIRE(((x * y) * z) == (x * (y * z)));
                    REQUIRE((x * (y + z)) == (x * y + x * z));
                }
            }
        }
    }
}

TEST_CASE("rref on the identity is the identity") {
    auto m = FpMatrix::identity(3, 5);
    auto [r, piv] = rref(m);
    REQUIRE(r == m);
    REQUIRE(piv == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref of the zero matrix") {
    FpMatrix m(2, 4, 3);
    auto [r, piv] = rref(m);
    REQUIRE(r == m);
    REQUIRE(piv.empty());
}

TEST_CASE("rref with a dependent row over F_5") {
    // [[1,2],[2,4]]: second row is twice the first
    FpMatrix m(2, 2, 5);
    m.set(0, 0, 1); m.set(0, 1, 2);
    m.set(1, 0, 2); m.set(1, 1, 4);
    auto [r, piv] = rref(m);
    REQUIRE(piv == std::vector<std::size_t>{0});
    REQUIRE(r.at(0, 0) == 1);
    REQUIRE(r.at(0, 1) == 2);
    REQUIRE(r.at(1, 0) == 0);
    REQUIRE(r.at(1, 1) == 0);
}

TEST_CASE("rref is idempotent and rank-preserving on assorted matrices") {
    long long p = 7;
    // deterministic pseudo-random fill
    long long seed = 1;
    for (int trial = 0; trial < 25; ++trial) {
        FpMatrix m(4, 5, p);
        for (auto& x : m.a) {
            seed = (seed * 1103515245 + 12345) % 2147483647;
            x = seed % p;
        }
        auto [r, piv] = rref(m);
        auto [r2, piv2] = rref(r);
        REQUIRE(r2 == r);
        REQUIRE(piv2 == piv);
        REQUIRE(rank(m) == piv.size());
        for (std::size_t i = 1; i < piv.size(); ++i) REQUIRE(piv[i - 1] < piv[i]);
    }
}

TEST_CASE("kernel of invertible matrix is empty") {
    REQUIRE(kernel_basis(FpMatrix::identity(2, 3)).empty());
}

TEST_CASE("kernel of the zero map is everything") {
    FpMatrix m(1, 3, 2);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 3);
    REQUIRE(span_rank(k, 3, 2) == 3);
}

TEST_CASE("kernel of [[1,1]] over F_2") {
    FpMatrix m(1, 2, 2);
    m.set(0, 0, 1); m.set(0, 1, 1);
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    REQUIRE(k[0] == FpVec{1, 1});
}

TEST_CASE("kernel vectors are annihilated; rank-nullity holds") {
    long long p = 5;
    long long seed = 99;
    for (int trial = 0; trial < 25; ++trial) {
        FpMatrix m(3, 6, p);
        for (auto& x : m.a) {
            seed = (seed * 1103515245 + 12345) % 2147483647;
            x = seed % p;
        }
        auto k = kernel_basis(m);
        REQUIRE(k.size() + rank(m) == 6);
        for (const auto& v : k) REQUIRE(fpvec_is_zero(mat_vec(m, v)));
        REQUIRE(span_rank(k, 6, p) == k.size());
    }
}

TEST_CASE("solve with identity returns rhs") {
    auto m = FpMatrix::identity(3, 7);
    FpVec b = {2, 5, 6};
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    REQUIRE(*x == b);
}

TEST_CASE("solve detects inconsistency") {
    FpMatrix m(2, 2, 3);
    auto x = solve(m, FpVec{1, 0});
    REQUIRE(!x.has_value());
}

TEST_CASE("solve [[2]] x = (3) over F_5") {
    FpMatrix m(1, 1, 5);
    m.set(0, 0, 2);
    auto x = solve(m, FpVec{3});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == 4);
    REQUIRE(mat_vec(m, *x) == FpVec{3});
}

TEST_CASE("solve rejects dimension mismatch") {
    FpMatrix m(2, 2, 3);
    REQUIRE_THROWS(solve(m, FpVec{1, 0, 0}));
}

TEST_CASE("solutions verify by multiplication") {
    long long p = 3;
    long long seed = 7;
    for (int trial = 0; trial < 40; ++trial) {
        FpMatrix m(3, 4, p);
        for (auto& x : m.a) {
            seed = (seed * 1103515245 + 12345) % 2147483647;
            x = seed % p;
        }
        FpVec b(3);
        for (auto& x : b) {
            seed = (seed * 1103515245 + 12345) % 2147483647;
            x = seed % p;
        }
        auto x = solve(m, b);
        if (x.has_value()) REQUIRE(mat_vec(m, *x) == b);
    }
}

TEST_CASE("inverse and determinant") {
    FpMatrix m(2, 2, 5);
    m.set(0, 0, 1); m.set(0, 1, 2);
    m.set(1, 0, 3); m.set(1, 1, 4);
    REQUIRE(mat_det(m) == fp_norm(1 * 4 - 2 * 3, 5));
    auto inv = mat_inverse(m);
    REQUIRE(inv.has_value());
    REQUIRE(mat_mul(m, *inv) == FpMatrix::identity(2, 5));

    FpMatrix s(2, 2, 5);
    s.set(0, 0, 1); s.set(0, 1, 2);
    s.set(1, 0, 2); s.set(1, 1, 4);
    REQUIRE(mat_det(s) == 0);
    REQUIRE(!mat_inverse(s).has_value());
}
