#include "weylarr/verify.hpp"

#include <doctest.h>

#include <set>

using namespace weylarr;

namespace {
std::vector<CheckResult> run_one(const std::string& name, Depth depth = Depth::exhaustive) {
    SuiteOptions opt;
    opt.depth = depth;
    return run_suite({RootSystemId::parse(name)}, opt);
}

const CheckResult* find_check(const std::vector<CheckResult>& rs, const std::string& prefix) {
    for (const auto& r : rs)
        if (r.check_id.rfind(prefix, 0) == 0) return &r;
    return nullptr;
}
} // namespace

TEST_CASE("A3 exhaustive run is clean") {
    auto results = run_one("A3");
    CHECK(count_failures(results) == 0);
    const CheckResult* card = find_check(results, "thm:card/A3");
    REQUIRE(card);
    CHECK(card->status == CheckResult::Status::pass);
    CHECK(card->witness["diff"] == 2); // h/2 = m_2 = 2
}

TEST_CASE("D4 run finds the three RO orbits") {
    auto results = run_one("D4");
    CHECK(count_failures(results) == 0);
    const CheckResult* census = find_check(results, "rem:numerical/D4");
    REQUIRE(census);
    CHECK(census->witness["orbits"] == 3);
    CHECK(census->witness["ro_orbits"] == 3);
    CHECK(find_check(results, "ex:basis-RO/D4/orbit0"));
    CHECK(find_check(results, "thm:criterion/D4"));
}

TEST_CASE("G2 run skips the pair-level checks with a reason") {
    auto results = run_one("G2");
    CHECK(count_failures(results) == 0);
    const CheckResult* card = find_check(results, "thm:card/G2");
    REQUIRE(card);
    CHECK(card->status == CheckResult::Status::skipped);
    CHECK(card->skip_reason.find("rank >= 3") != std::string::npos);
    // the rank-2 profile checks still run
    const CheckResult* iso = find_check(results, "thm:iso/G2");
    REQUIRE(iso);
    CHECK(iso->status == CheckResult::Status::pass);
}

TEST_CASE("suite output is deterministic") {
    auto r1 = run_one("B3");
    auto r2 = run_one("B3");
    REQUIRE(r1.size() == r2.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].check_id == r2[i].check_id);
        CHECK(r1[i].status_str() == r2[i].status_str());
        CHECK(r1[i].witness.dump() == r2[i].witness.dump());
    }
}

TEST_CASE("representative depth still covers every orbit") {
    auto results = run_one("D5", Depth::representatives);
    CHECK(count_failures(results) == 0);
    CHECK(find_check(results, "thm:card/D5/orbit0"));
    CHECK(find_check(results, "thm:card/D5/orbit1"));
}

TEST_CASE("every in-scope label appears for a full small-rank run") {
    SuiteOptions opt;
    auto results = run_suite({RootSystemId::parse("A3"), RootSystemId::parse("B3"),
                              RootSystemId::parse("C3"), RootSystemId::parse("D4"),
                              RootSystemId::parse("G2"), RootSystemId::parse("B4"),
                              RootSystemId::parse("D5")},
                             opt);
    std::set<std::string> labels;
    for (const auto& r : results) labels.insert(r.check_id.substr(0, r.check_id.find('/')));
    for (const char* want :
         {"thm:dual", "lem:Cartan", "exponents.i-v", "exponents.vi", "closure.reflect",
          "lem:eg.i", "lem:eg.ii", "rem:well-known", "lem:repeat", "lem:coes", "prop:b-a",
          "thm:iso", "cor:criterion", "cor:differences", "cor:c-max", "lem:cases",
          "cor:reducible", "prop:long", "prop:irr", "lem:3roots", "lem:special",
          "rem:numerical", "prop:characterize.i", "prop:characterize.ii", "def:A_1^2", "def:RO",
          "cor:existence-D4", "prop:not-empty", "thm:parabolic", "not:associated", "thm:OST",
          "rem:alternative", "thm:card", "prop:X=A_1^2", "rem:K0", "prop:3sums", "cor:passing",
          "lem:partition", "prop:2cases", "prop:=", "def:N", "thm:half1", "thm:half2",
          "lem:compatible", "prop:weaker", "thm:crucial", "prop:existence", "cor:same-component",
          "rem:A2,B2", "eq:once", "lem:local-height", "def:local", "cor:Local-global",
          "cor:Omega-cx", "thm:Factorization", "thm:combine", "thm:main", "thm:Abe",
          "lem:decompose", "thm:criterion", "ex:basis-RO", "thm:basis-non-RO",
          "thm:basis-derived", "prop:exact", "prop:general-X", "lem:start.i", "def:X-bar",
          "cor:exactly2", "rem:3", "def:s"}) {
        CAPTURE(want);
        CHECK(labels.count(want) == 1);
    }
}
