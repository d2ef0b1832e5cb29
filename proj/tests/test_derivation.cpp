#include "weylarr/classical.hpp"
#include "weylarr/subsystem.hpp"

#include <doctest.h>

#include <numeric>

using namespace weylarr;

namespace {
PairKey find_pair(const RootSystem& rs, bool want_ro) {
    for (const auto& p : all_a12_pairs(rs)) {
        PairClassification pc = classify_pair(rs, rs.root(p.first).c, rs.root(p.second).c);
        if (pc.is_ro == want_ro) return p;
    }
    throw std::runtime_error("no such pair");
}
} // namespace

TEST_CASE("embeddings send roots to the textbook forms") {
    {
        const RootSystem& rs = RootSystem::get("B3");
        ClassicalEmbedding emb = classical_embedding(rs);
        auto forms = weyl_arrangement_forms(rs, emb);
        CHECK(forms.size() == 9);
        // x_i forms are present
        int singles = 0;
        for (const auto& f : forms) {
            int nz = 0;
            for (long long x : f) nz += x != 0;
            if (nz == 1) ++singles;
        }
        CHECK(singles == 3);
    }
    {
        const RootSystem& rs = RootSystem::get("C3");
        auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
        CHECK(forms.size() == 9); // same hyperplanes as B3
    }
    {
        const RootSystem& rs = RootSystem::get("A3");
        auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
        CHECK(forms.size() == 6);
    }
}

TEST_CASE("eta and tau fields are tangent to the D4 arrangement") {
    const RootSystem& rs = RootSystem::get("D4");
    auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
    REQUIRE(forms.size() == 12);
    CHECK(is_in_derivation_module(tau_derivation(4, 2), forms)); // sum x^3 d
    CHECK(is_in_derivation_module(eta_derivation(4), forms));
    CHECK(is_in_derivation_module(euler_derivation(4), forms));
}

TEST_CASE("D4 classical basis passes Saito; a wrong degree fails") {
    const RootSystem& rs = RootSystem::get("D4");
    auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
    std::vector<Derivation> basis = classical_basis(rs);
    std::vector<int> degs;
    for (const auto& d : basis) degs.push_back(d.degree());
    CHECK(degs == std::vector<int>{1, 3, 3, 5});
    CHECK(std::accumulate(degs.begin(), degs.end(), 0) == 12);
    CHECK(saito_check(basis, forms).passed);

    // replacing eta by sum x^7 d breaks the degree count and the criterion
    std::vector<Derivation> bad = {tau_derivation(4, 1), tau_derivation(4, 2),
                                   tau_derivation(4, 3), tau_derivation(4, 4)};
    SaitoResult sr = saito_check(bad, forms);
    CHECK(!sr.passed);
}

TEST_CASE("B2 basis has degrees 1 and 3") {
    const RootSystem& rs = RootSystem::get("B2");
    std::vector<Derivation> basis = classical_basis(rs);
    CHECK(basis[0].degree() == 1);
    CHECK(basis[1].degree() == 3);
    auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
    CHECK(saito_check(basis, forms).passed);
}

TEST_CASE("A3 braid basis essentializes to degrees 1,2,3") {
    const RootSystem& rs = RootSystem::get("A3");
    std::vector<Derivation> basis = classical_basis(rs);
    std::vector<int> degs;
    for (const auto& d : basis) degs.push_back(d.degree());
    CHECK(degs == std::vector<int>{1, 2, 3});
    auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
    CHECK((int)forms.size() == 6);
    CHECK(saito_check(basis, forms).passed);
}

TEST_CASE("eta vanishes on the coordinate RO flat of D4 and the tau basis survives") {
    const RootSystem& rs = RootSystem::get("D4");
    // {eps3 - eps4, eps3 + eps4} = {alpha_3, alpha_4}: the coordinate flat
    BasisRestrictionResult br = verify_basis_restriction(rs, {0, 0, 1, 0}, {0, 0, 0, 1});
    CHECK(br.passed);
    CHECK(br.ro);
    CHECK(br.eta_vanished);
    CHECK(br.degrees == std::vector<int>{1, 3});
    CHECK(br.dropped == "eta");
}

TEST_CASE("the triality orbits of D4 keep a nonzero but dependent eta") {
    const RootSystem& rs = RootSystem::get("D4");
    // {eps1 - eps2, eps3 - eps4} = {alpha_1, alpha_3}
    BasisRestrictionResult br = verify_basis_restriction(rs, {1, 0, 0, 0}, {0, 0, 1, 0});
    CHECK(br.passed);
    CHECK(br.ro);
    CHECK(!br.eta_vanished);
    CHECK(br.degrees == std::vector<int>{1, 3});
}

TEST_CASE("non-RO restriction bases across families") {
    {
        const RootSystem& rs = RootSystem::get("B4");
        PairKey p = find_pair(rs, false);
        BasisRestrictionResult br =
            verify_basis_restriction(rs, rs.root(p.first).c, rs.root(p.second).c);
        CHECK(br.passed);
        CHECK(br.degrees == std::vector<int>{1, 3});
    }
    {
        const RootSystem& rs = RootSystem::get("D5");
        PairKey p = find_pair(rs, false);
        BasisRestrictionResult br =
            verify_basis_restriction(rs, rs.root(p.first).c, rs.root(p.second).c);
        CHECK(br.passed);
        CHECK(br.degrees == std::vector<int>{1, 3, 4});
    }
    {
        const RootSystem& rs = RootSystem::get("A4");
        PairKey p = find_pair(rs, false);
        BasisRestrictionResult br =
            verify_basis_restriction(rs, rs.root(p.first).c, rs.root(p.second).c);
        CHECK(br.passed);
        CHECK(br.degrees == std::vector<int>{1, 2});
    }
}

TEST_CASE("A3 RO flat goes through the D3 realization") {
    const RootSystem& rs = RootSystem::get("A3");
    PairKey p = find_pair(rs, true);
    BasisRestrictionResult br = verify_basis_restriction(rs, rs.root(p.first).c, rs.root(p.second).c);
    CHECK(br.passed);
    CHECK(br.degrees == std::vector<int>{1});
}

TEST_CASE("phi lies in the deleted module but not the full one") {
    int l = 4;
    const RootSystem& rs = RootSystem::get("D4");
    auto forms = weyl_arrangement_forms(rs, classical_embedding(rs));
    Derivation phi = d_family_phi(l);
    IntVec h1 = {1, 1, 0, 0};
    std::vector<IntVec> deleted;
    for (const auto& f : forms)
        if (f != h1) deleted.push_back(f);
    REQUIRE(deleted.size() == forms.size() - 1);
    CHECK(is_in_derivation_module(phi, deleted));
    CHECK(!is_in_derivation_module(phi, forms));
    CHECK(is_in_derivation_module(phi * Poly::linear_form(h1), forms));
}

TEST_CASE("exceptional families have no classical basis") {
    CHECK_THROWS(classical_basis(RootSystem::get("F4")));
    CHECK_THROWS(classical_basis(RootSystem::get("E6")));
}
