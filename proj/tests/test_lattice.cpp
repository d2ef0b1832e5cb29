#include "weylarr/lattice.hpp"

#include <doctest.h>

using namespace weylarr;

TEST_CASE("empty arrangement gives t^n") {
    CharPoly chi = char_poly({}, 3);
    CHECK(chi.coeff == std::vector<long long>{0, 0, 0, 1});
}

TEST_CASE("three concurrent lines in the plane") {
    // the rank-2 braid pencil: chi = (t-1)(t-2)
    std::vector<IntVec> forms = {{1, 0}, {0, 1}, {1, 1}};
    CharPoly chi = char_poly(forms, 2);
    CHECK(chi == char_poly_from_roots({1, 2}));
    for (long long p : {101, 103})
        CHECK(complement_point_count(forms, 2, p) == chi.eval(p));
}

TEST_CASE("boolean cube") {
    std::vector<IntVec> forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(char_poly(forms, 3) == char_poly_from_roots({1, 1, 1}));
}

TEST_CASE("four planes in general position around the origin") {
    // codim-2 flats all simple, the origin carries mu = -3:
    // chi = t^3 - 4t^2 + 6t - 3
    std::vector<IntVec> forms = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    CharPoly chi = char_poly(forms, 3);
    CHECK(chi.coeff == std::vector<long long>{-3, 6, -4, 1});
    for (long long p : {101, 103})
        CHECK(complement_point_count(forms, 3, p) == chi.eval(p));
}

TEST_CASE("duplicate hyperplanes are rejected") {
    CHECK_THROWS_AS(char_poly({{1, 0}, {2, 0}}, 2), std::invalid_argument);
}

TEST_CASE("bounds raise the dedicated error") {
    CHECK_THROWS_AS(char_poly({{1, 0, 0, 0, 0, 0, 0}}, 7), LatticeBoundExceeded);
    std::vector<IntVec> many;
    for (int i = 0; i < 81; ++i) many.push_back({1, i});
    CHECK_THROWS_AS(char_poly(many, 2), LatticeBoundExceeded);
}

TEST_CASE("char poly printing and evaluation") {
    CharPoly chi = char_poly_from_roots({1, 3});
    CHECK(chi.coeff == std::vector<long long>{3, -4, 1});
    CHECK(chi.eval(5) == 8);
    CHECK(chi.str() == "t^2 - 4t + 3");
}
