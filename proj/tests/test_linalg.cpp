#include "weylarr/linalg.hpp"
#include "weylarr/rational.hpp"

#include <doctest.h>

using namespace weylarr;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)) == Rational(2));
    CHECK(Rational(7).as_integer() == 7);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
}

TEST_CASE("integer echelon, rank and span membership") {
    IntMat m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(int_rank(m) == 2);
    CHECK(in_row_span(m, {1, 3, 4}));
    CHECK(!in_row_span(m, {0, 0, 1}));

    IntMat ech = int_row_echelon(m);
    REQUIRE(ech.size() == 2);
    IntVec res = echelon_residual(ech, {1, 3, 4});
    CHECK(std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; }));
}

TEST_CASE("nullspace is an exact kernel basis") {
    IntMat m = {{1, 1, 1, 0}, {0, 1, -1, 2}};
    IntMat ker = int_nullspace(m);
    REQUIRE(ker.size() == 2);
    for (const IntVec& v : ker) {
        for (const IntVec& row : m) {
            long long s = 0;
            for (size_t i = 0; i < v.size(); ++i) s += row[i] * v[i];
            CHECK(s == 0);
        }
    }
}

TEST_CASE("rational solve handles consistent and inconsistent systems") {
    RatMat a = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}, {Rational(4), Rational(6)}};
    RatVec b = {Rational(5), Rational(11), Rational(16)};
    RatVec x;
    REQUIRE(solve_rational(a, b, x));
    CHECK(x[0] == Rational(1));
    CHECK(x[1] == Rational(2));
    b[2] = Rational(17);
    CHECK(!solve_rational(a, b, x));
}

TEST_CASE("primitive covectors are gcd-reduced with positive lead") {
    CHECK(primitive_covector(RatVec{Rational(1, 2), Rational(-1, 3)}) == IntVec{3, -2});
    CHECK(primitive_covector(IntVec{-2, 4, -6}) == IntVec{1, -2, 3});
    CHECK_THROWS(primitive_covector(IntVec{0, 0}));
}

TEST_CASE("jacobi eigenvalues of a known symmetric matrix") {
    // eigenvalues of [[2,-1],[-1,2]] are 1 and 3
    auto eig = symmetric_eigenvalues({{2, -1}, {-1, 2}});
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(3.0).epsilon(1e-12));
}
