#include "weylarr/catalog.hpp"
#include "weylarr/root_system.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace weylarr;

TEST_CASE("id parsing, admissibility, D3 aliasing") {
    CHECK(RootSystemId::parse("E8").str() == "E8");
    CHECK(RootSystemId::parse("d5").str() == "D5");
    CHECK(RootSystemId::parse("D3").str() == "A3"); // canonical alias
    CHECK_THROWS(RootSystemId::parse("A0"));
    CHECK_THROWS(RootSystemId::parse("C2"));
    CHECK_THROWS(RootSystemId::parse("E5"));
    CHECK_THROWS(RootSystemId::parse("E9"));
    CHECK_THROWS(RootSystemId::parse("F3"));
    CHECK_THROWS(RootSystemId::parse("G3"));
    CHECK_THROWS(RootSystemId::parse("H4"));
    CHECK(catalog_ids(8).size() == 31);
}

TEST_CASE("A1 is the one-root system") {
    const RootSystem& rs = RootSystem::get("A1");
    CHECK(rs.num_positive() == 1);
    CHECK(rs.coxeter_number() == 2);
    CHECK(rs.exponents() == std::vector<int>{1});
}

TEST_CASE("C3 matches the textbook positive system") {
    const RootSystem& rs = RootSystem::get("C3");
    REQUIRE(rs.num_positive() == 9);
    std::multiset<int> heights;
    for (int i = 0; i < 9; ++i) heights.insert(rs.root(i).height);
    CHECK(heights == std::multiset<int>{1, 1, 1, 2, 2, 3, 3, 4, 5});
    CHECK(rs.highest_root().c == std::vector<int>{2, 2, 1});

    // pairing(theta, mu1) expands through the Gram matrix to 2
    std::vector<int> mu1 = {1, 0, 0};
    CHECK(rs.pairing(rs.highest_root().c, mu1) == 2);
    CHECK(rs.exponents() == std::vector<int>{1, 3, 5});
}

TEST_CASE("E8 generation closes at 120 positive roots") {
    const RootSystem& rs = RootSystem::get("E8");
    CHECK(rs.num_positive() == 120);
    CHECK(rs.coxeter_number() == 30);
    CHECK(rs.highest_root().height == 29);
    CHECK(rs.exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
    CHECK(rs.c_max() == 6);
}

TEST_CASE("pairing and reflection basics") {
    const RootSystem& a2 = RootSystem::get("A2");
    std::vector<int> a1 = {1, 0}, a2r = {0, 1};
    CHECK(a2.pairing(a1, a1) == 2);
    CHECK(a2.pairing(a1, a2r) == -1);
    CHECK(a2.reflect(a1, a2r) == std::vector<int>{1, 1});
    CHECK(a2.reflect(a1, a1) == std::vector<int>{-1, 0});

    const RootSystem& d4 = RootSystem::get("D4");
    std::vector<int> theta = d4.highest_root().c;
    std::vector<int> neg(theta.size());
    for (size_t i = 0; i < theta.size(); ++i) neg[i] = -theta[i];
    CHECK(d4.reflect(theta, theta) == neg);
}

TEST_CASE("exponent routes agree with each other and the catalog") {
    for (const RootSystemId& id : catalog_ids(8)) {
        CAPTURE(id.str());
        const RootSystem& rs = RootSystem::get(id);
        CatalogEntry ce = catalog_entry(id);
        CHECK(rs.exponents() == ce.exponents);
        CHECK(rs.exponents_via_dual_partition() == ce.exponents);
        CHECK(rs.coxeter_number() == ce.coxeter);
        CHECK(rs.num_positive() == ce.num_positive);
        CHECK(rs.highest_root().c == std::vector<int>(ce.theta.begin(), ce.theta.end()));
        CHECK(rs.c_max() == ce.c_max);
        auto ee = rs.exponents_via_cartan_eigenvalues(1e-9);
        CHECK(ee.rounded == ce.exponents);
        CHECK(ee.max_residual < 1e-9);
    }
}

TEST_CASE("the pinned catalog file matches the built systems") {
    std::vector<std::vector<std::vector<int>>> cartans;
    auto entries = load_catalog_file(std::string(TEST_DATA_DIR) + "/catalog.txt", &cartans);
    REQUIRE(entries.size() == 31);
    for (size_t i = 0; i < entries.size(); ++i) {
        const CatalogEntry& e = entries[i];
        CAPTURE(e.id.str());
        const RootSystem& rs = RootSystem::get(e.id);
        CHECK(rs.cartan() == cartans[i]);
        CHECK(rs.exponents() == e.exponents);
        CHECK(rs.coxeter_number() == e.coxeter);
        CHECK(rs.num_positive() == e.num_positive);
        CHECK(rs.highest_root().c == std::vector<int>(e.theta.begin(), e.theta.end()));
        CatalogEntry embedded = catalog_entry(e.id);
        CHECK(embedded.exponents == e.exponents);
        CHECK(embedded.theta == e.theta);
    }
}

TEST_CASE("exponent identities hold across the catalog") {
    for (const RootSystemId& id : catalog_ids(8)) {
        CAPTURE(id.str());
        const RootSystem& rs = RootSystem::get(id);
        int l = rs.rank(), h = rs.coxeter_number();
        CHECK(2 * rs.num_positive() == l * h);
        CHECK(h == rs.highest_root().height + 1);
        long long sum = std::accumulate(rs.exponents().begin(), rs.exponents().end(), 0LL);
        CHECK(sum == (long long)l * h / 2);
        for (int j = 0; j < l; ++j) CHECK(rs.exponents()[j] + rs.exponents()[l - 1 - j] == h);
    }
}

TEST_CASE("normsq values stay in the normalized set") {
    for (const char* name : {"B3", "C4", "F4", "G2", "E6"}) {
        const RootSystem& rs = RootSystem::get(name);
        for (int i = 0; i < rs.num_positive(); ++i) {
            Rational n = rs.root(i).normsq;
            bool allowed = n == Rational(2) || n == Rational(1) || n == Rational(2, 3);
            CHECK(allowed);
        }
    }
}

TEST_CASE("height profile: G2 is the doubled case") {
    const RootSystem& g2 = RootSystem::get("G2");
    HeightProfile hp = g2.height_profile();
    CHECK(hp.case1);
    CHECK(g2.exponents()[1] == g2.c_max() + 2);
    CHECK(hp.top_roots.size() == 4); // m_2 - 1
}

TEST_CASE("height profile: rank >= 3 has distinct differences") {
    for (const char* name : {"A3", "B4", "D5", "E6", "F4"}) {
        CAPTURE(name);
        const RootSystem& rs = RootSystem::get(name);
        HeightProfile hp = rs.height_profile();
        CHECK(!hp.case1);
        CHECK(rs.exponents()[1] == rs.c_max() + 1);
    }
}

TEST_CASE("height profile: E8 top chain") {
    const RootSystem& rs = RootSystem::get("E8");
    HeightProfile hp = rs.height_profile();
    CHECK(hp.top_roots.size() == 6);
    REQUIRE(hp.lambda_chain.size() == 6);
    // coefficients along the chain are 1..6
    const std::vector<int>& theta = rs.highest_root().c;
    for (size_t s = 1; s < hp.lambda_chain.size(); ++s) {
        int idx = -1;
        for (int j = 0; j < 8; ++j)
            if (hp.lambda_chain[s][j] == 1) idx = j;
        CHECK(theta[idx] == (int)s + 1);
    }
}

TEST_CASE("structural checks across small systems") {
    for (const char* name : {"A3", "B3", "C3", "D4", "F4", "B4"}) {
        CAPTURE(name);
        LemmaReport rep = RootSystem::get(name).structural_checks();
        CHECK(rep.all_passed());
    }
    const RootSystem& e8 = RootSystem::get("E8");
    CHECK(e8.roots_of_height(23).size() == 2);
    LemmaReport rep = e8.structural_checks();
    CHECK(rep.all_passed());

    const RootSystem& a3 = RootSystem::get("A3");
    CHECK(a3.exponents()[1] == 2);
    CHECK(a3.roots_of_height(2).size() == 2);

    const RootSystem& b3 = RootSystem::get("B3");
    bool has_long = false;
    for (int i : b3.roots_of_height(3))
        if (b3.root(i).normsq == Rational(2)) has_long = true;
    CHECK(has_long);
}

TEST_CASE("rank above the catalog still generates") {
    const RootSystem& rs = RootSystem::get("A9");
    CHECK(rs.num_positive() == 45);
    CHECK(rs.coxeter_number() == 10);
    const RootSystem& b9 = RootSystem::get("B9");
    CHECK(b9.num_positive() == 81);
}
