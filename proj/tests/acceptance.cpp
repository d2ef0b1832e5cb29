// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; nothing is deferred to configuration.

#include "weylarr/catalog.hpp"
#include "weylarr/classical.hpp"
#include "weylarr/lattice.hpp"
#include "weylarr/parallel.hpp"
#include "weylarr/restriction.hpp"
#include "weylarr/subsystem.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

using namespace weylarr;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int num, const std::string& what, bool ok, const std::string& extra = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", num, what.c_str(),
                extra.empty() ? "" : " -- ", extra.c_str());
    if (!ok) ++failures;
}

struct PairData {
    PairKey key;
    bool ro = false;
    CardinalityCheck cc;
    long long sum_m2_minus1 = 0;
    long long sum_cmax = 0;
    bool ok = false;
    std::string error;
};

std::map<std::string, std::vector<PairData>> g_pairs;     // per system, all A1^2 pairs
std::map<std::string, std::vector<PairOrbit>> g_orbits;

void compute_pairs(const RootSystem& rs) {
    auto orbits = pair_orbits(rs);
    g_orbits[rs.id().str()] = orbits;
    std::vector<PairKey> keys;
    for (const auto& o : orbits) keys.insert(keys.end(), o.members.begin(), o.members.end());
    std::sort(keys.begin(), keys.end());
    std::vector<PairData> data(keys.size());
    parallel_for((int)keys.size(), [&](int i) {
        PairData& pd = data[i];
        pd.key = keys[i];
        try {
            const auto &b1 = rs.root(keys[i].first).c, &b2 = rs.root(keys[i].second).c;
            pd.cc = verify_card_theorem(rs, b1, b2);
            pd.ro = pd.cc.ro;
            NeighborhoodDecomposition nd = neighborhood_decomposition(rs, b1, b2);
            for (const Subsystem& psi : nd.n0) {
                long long m2psi = (long long)psi.positive.size() / 3;
                pd.sum_m2_minus1 += m2psi - 1;
                pd.sum_cmax += psi.component_c_max(0);
            }
            pd.ok = pd.cc.passed;
            if (!pd.ok) pd.error = pd.cc.detail;
        } catch (const std::exception& e) {
            pd.error = e.what();
        }
    });
    g_pairs[rs.id().str()] = std::move(data);
}

} // namespace

int main() {
    std::vector<RootSystemId> all = catalog_ids(8);
    std::vector<RootSystemId> rank3plus;
    for (const auto& id : all)
        if (id.rank >= 3) rank3plus.push_back(id);

    // 1. catalog exponents through both routes, < 5 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string bad;
        for (const auto& id : all) {
            const RootSystem& rs = RootSystem::get(id);
            CatalogEntry ce = catalog_entry(id);
            bool here = rs.exponents_via_dual_partition() == ce.exponents;
            try {
                auto ee = rs.exponents_via_cartan_eigenvalues(1e-9);
                here = here && ee.rounded == ce.exponents && ee.max_residual < 1e-9;
            } catch (const std::exception&) {
                here = false;
            }
            if (!here) {
                ok = false;
                bad = id.str();
            }
        }
        double dt = seconds_since(t0);
        ok = ok && dt < 5.0;
        char extra[128];
        std::snprintf(extra, sizeof extra, "%zu systems, %.2fs%s%s", all.size(), dt,
                      bad.empty() ? "" : ", first failure ", bad.c_str());
        report(1, "dual-partition and Cartan-eigenvalue exponents match the catalog", ok, extra);
    }

    // Shared exhaustive pair pass for criteria 2, 3, 9.
    auto t_pairs = std::chrono::steady_clock::now();
    for (const auto& id : rank3plus) compute_pairs(RootSystem::get(id));
    double pair_seconds = seconds_since(t_pairs);

    // 2. cardinality theorem on every A1^2 pair, rank 3..8, both hyperplanes
    {
        bool ok = true;
        long long pairs = 0;
        std::string bad;
        for (const auto& id : rank3plus) {
            for (const PairData& pd : g_pairs[id.str()]) {
                ++pairs;
                const RootSystem& rs = RootSystem::get(id);
                long long want = pd.ro ? rs.coxeter_number() / 2 : rs.exponents()[id.rank - 2];
                if (!pd.ok || pd.cc.diff1 != want || pd.cc.diff2 != want) {
                    ok = false;
                    if (bad.empty()) bad = id.str() + ": " + pd.error;
                }
            }
        }
        ok = ok && pair_seconds < 600.0;
        char extra[160];
        std::snprintf(extra, sizeof extra, "%lld pairs in %.1fs (budget 600s)%s%s", pairs,
                      pair_seconds, bad.empty() ? "" : "; ", bad.c_str());
        report(2, "|A^H| - |A^X| = h/2 (RO) or m_{l-1} (non-RO), exhaustively", ok, extra);
    }

    // 3. 2(K0 + K1 + 1) = h and K1 = K2, same pair set, exact rationals
    {
        bool ok = true;
        for (const auto& id : rank3plus) {
            const RootSystem& rs = RootSystem::get(id);
            Rational h((long long)rs.coxeter_number());
            for (const PairData& pd : g_pairs[id.str()]) {
                if (!pd.error.empty() ||
                    Rational(2) * (pd.cc.k0 + pd.cc.k1 + Rational(1)) != h ||
                    Rational(2) * (pd.cc.k0 + pd.cc.k2 + Rational(1)) != h ||
                    pd.cc.k1 != pd.cc.k2)
                    ok = false;
            }
        }
        report(3, "K-sum identity 2(K0 + K(b_i) + 1) = h with equal mixed sums", ok);
    }

    // 4. characteristic polynomial factorization per orbit representative
    {
        bool ok = true;
        int checked = 0, skipped = 0;
        std::string bad;
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& id : rank3plus) {
            const RootSystem& rs = RootSystem::get(id);
            int l = id.rank;
            for (const PairOrbit& o : g_orbits[id.str()]) {
                std::vector<int> exps = rs.exponents();
                std::vector<int> removed =
                    o.ro ? std::vector<int>{rs.coxeter_number() / 2, exps[l - 1]}
                         : std::vector<int>{exps[l - 2], exps[l - 1]};
                std::vector<long long> roots;
                {
                    std::vector<int> rem = exps;
                    for (int r : removed) {
                        auto it = std::find(rem.begin(), rem.end(), r);
                        if (it != rem.end()) rem.erase(it);
                    }
                    roots.assign(rem.begin(), rem.end());
                }
                try {
                    RestrictionClasses rc = restriction_classes(
                        rs, {rs.root(o.representative.first).c, rs.root(o.representative.second).c});
                    CharPoly chi = char_poly(rc.forms, l - 2, 6);
                    ++checked;
                    if (!(chi == char_poly_from_roots(roots))) {
                        ok = false;
                        if (bad.empty()) bad = id.str() + " chi = " + chi.str();
                    }
                } catch (const LatticeBoundExceeded&) {
                    if (l <= 6) {
                        ok = false;
                        if (bad.empty()) bad = id.str() + " lattice refused within rank 6";
                    } else {
                        ++skipped;
                    }
                }
            }
        }
        char extra[160];
        std::snprintf(extra, sizeof extra, "%d restrictions, %d skipped, %.1fs%s%s", checked,
                      skipped, seconds_since(t0), bad.empty() ? "" : "; ", bad.c_str());
        report(4, "chi(A^X) = prod (t - m) over the retained exponents", ok, extra);
    }

    // 5. orbit census
    {
        bool ok = true;
        std::string bad;
        for (const auto& id : rank3plus) {
            const auto& orbits = g_orbits[id.str()];
            int ro = (int)std::count_if(orbits.begin(), orbits.end(),
                                        [](const PairOrbit& o) { return o.ro; });
            int n = (int)orbits.size();
            bool here;
            if (id.family == 'D' && id.rank == 4) here = n == 3 && ro == 3;
            else if (id.family == 'D') here = n == 2 && ro == 1;
            else if ((id.family == 'B' || id.family == 'C') && id.rank >= 4) here = n == 2 && ro == 0;
            else if (id.family == 'A' && id.rank == 3) here = n == 1 && ro == 1;
            else here = n == 1 && ro == 0;
            if (!here) {
                ok = false;
                if (bad.empty())
                    bad = id.str() + " has " + std::to_string(n) + " orbits, " +
                          std::to_string(ro) + " RO";
            }
        }
        report(5, "orbit census: D4 3/3 RO, D>=5 2 with 1 RO, B/C>=4 2 with 0 RO, else 1", ok, bad);
    }

    // 6. Saito checks on the classical families, < 60 s
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string bad;
        auto note = [&](bool here, const std::string& what) {
            if (!here) {
                ok = false;
                if (bad.empty()) bad = what;
            }
        };
        // D family: full basis, eta annihilation, restricted tau basis
        for (int l : {3, 4, 5, 6}) {
            const RootSystem& rs = RootSystem::get(l == 3 ? std::string("A3")
                                                          : "D" + std::to_string(l));
            ClassicalEmbedding emb = l == 3 ? d3_embedding(rs) : classical_embedding(rs);
            auto forms = weyl_arrangement_forms(rs, emb);
            std::vector<Derivation> basis;
            for (int i = 1; i + 1 <= l; ++i) basis.push_back(tau_derivation(l, i));
            basis.push_back(eta_derivation(l));
            note(saito_check(basis, forms).passed, "D" + std::to_string(l) + " full basis");
            // eta vanishes on the coordinate RO flat ker(x1+x2) ∩ ker(x1-x2)
            {
                IntVec h1(l, 0), h2(l, 0);
                h1[0] = h1[1] = 1;
                h2[0] = 1;
                h2[1] = -1;
                IntMat param = kernel_parametrization({h1, h2}, l);
                note(restrict_derivation(eta_derivation(l), param).is_zero(),
                     "D" + std::to_string(l) + " eta vanishing");
            }
            bool found_ro = false, found_vanishing = false;
            for (const PairOrbit& o : g_orbits[rs.id().str()]) {
                if (!o.ro) continue;
                found_ro = true;
                BasisRestrictionResult br = verify_basis_restriction(
                    rs, rs.root(o.representative.first).c, rs.root(o.representative.second).c);
                std::vector<int> want;
                for (int d = 1; d <= 2 * l - 5; d += 2) want.push_back(d);
                note(br.passed && br.ro && br.degrees == want,
                     "D" + std::to_string(l) + " RO restriction");
                if (br.eta_vanished) found_vanishing = true;
            }
            note(found_ro, "D" + std::to_string(l) + " has an RO orbit");
            note(found_vanishing, "D" + std::to_string(l) + " eta-vanishing orbit");
        }
        // A, B, C: non-RO restriction basis (A3 has no non-RO orbit; its RO
        // orbit is the D3 case handled above)
        for (char fam : {'A', 'B', 'C'}) {
            for (int l : {3, 4, 5}) {
                if (fam == 'C' && l < 3) continue;
                const RootSystem& rs = RootSystem::get(std::string(1, fam) + std::to_string(l));
                bool found = false;
                for (const PairOrbit& o : g_orbits[rs.id().str()]) {
                    if (o.ro) continue;
                    found = true;
                    BasisRestrictionResult br = verify_basis_restriction(
                        rs, rs.root(o.representative.first).c, rs.root(o.representative.second).c);
                    note(br.passed, std::string(1, fam) + std::to_string(l) + " non-RO restriction");
                    break;
                }
                if (!found && !(fam == 'A' && l == 3))
                    note(false, std::string(1, fam) + std::to_string(l) + " missing non-RO orbit");
            }
        }
        double dt = seconds_since(t0);
        ok = ok && dt < 60.0;
        char extra[160];
        std::snprintf(extra, sizeof extra, "%.1fs (budget 60s)%s%s", dt, bad.empty() ? "" : "; ",
                      bad.c_str());
        report(6, "Saito checks: D full + RO bases, A/B/C non-RO restriction bases", ok, extra);
    }

    // 7. the top-root partition, every pair at height m_{l-1}, rank 3..8
    {
        bool ok = true;
        std::string bad;
        for (const auto& id : rank3plus) {
            const RootSystem& rs = RootSystem::get(id);
            std::vector<int> level = rs.roots_of_height(rs.exponents()[id.rank - 2]);
            for (size_t a = 0; a < level.size(); ++a)
                for (size_t b = a + 1; b < level.size(); ++b) {
                    try {
                        TopRootPartition tp = appendix_bijection_check(rs, rs.root(level[a]).c,
                                                                       rs.root(level[b]).c);
                        if (!tp.passed) {
                            ok = false;
                            if (bad.empty()) bad = id.str() + ": " + tp.detail;
                        }
                    } catch (const std::exception& e) {
                        ok = false;
                        if (bad.empty()) bad = id.str() + ": " + e.what();
                    }
                }
        }
        report(7, "U partitions over N0 with local heights m_2(Psi)", ok, bad);
    }

    // 8. Coxeter numbers of the theta-perp components (simply laced)
    {
        bool ok = true;
        std::string bad;
        for (const auto& id : rank3plus) {
            const RootSystem& rs = RootSystem::get(id);
            if (!rs.simply_laced()) continue;
            ThetaPerp tp = theta_perp_decomposition(rs);
            int h = rs.coxeter_number(), m2 = rs.exponents()[1];
            for (size_t ci = 0; ci < tp.sub.components.size(); ++ci) {
                int want = tp.sub.components[ci].size() == 1 ? 2 : h - 2 * m2 + 2;
                if (tp.component_coxeter[ci] != want) {
                    ok = false;
                    if (bad.empty()) bad = id.str();
                }
            }
        }
        report(8, "h(Omega) = 2 (rank 1) or h - 2m_2 + 2 (rank >= 2), simply laced", ok, bad);
    }

    // 9. local-global inequalities with the exact equality condition
    {
        bool ok = true;
        std::string bad;
        for (const auto& id : rank3plus) {
            const RootSystem& rs = RootSystem::get(id);
            long long m2 = rs.exponents()[1], cmax = rs.c_max();
            for (const PairData& pd : g_pairs[id.str()]) {
                bool eq_expected = id.rank <= 4 || !pd.ro;
                bool a = pd.sum_m2_minus1 >= m2 - 1 && (eq_expected == (pd.sum_m2_minus1 == m2 - 1));
                bool b = pd.sum_cmax >= cmax && (eq_expected == (pd.sum_cmax == cmax));
                if (!(a && b && pd.error.empty())) {
                    ok = false;
                    if (bad.empty()) bad = id.str();
                }
            }
        }
        report(9, "local sums dominate m_2 - 1 and c_max; equality iff rank <= 4 or non-RO", ok, bad);
    }

    // 10. structural lemma suite
    {
        bool ok = true;
        std::string bad;
        for (const auto& id : all) {
            const RootSystem& rs = RootSystem::get(id);
            bool here = true;
            if (id.rank >= 3) here = rs.structural_checks().all_passed();
            if (id.rank >= 2) {
                HeightProfile hp = rs.height_profile();
                int m2 = rs.exponents()[1];
                here = here && (hp.case1 ? m2 == rs.c_max() + 2 : m2 == rs.c_max() + 1);
                here = here && (hp.case1 == (id.family == 'G'));
            }
            // exponents (vi) for every positive root, exact
            Rational h((long long)rs.coxeter_number());
            for (int i = 0; i < rs.num_positive() && here; ++i) {
                Rational s(0);
                for (int j = 0; j < rs.num_positive(); ++j)
                    s += rs.unit_inner_sq(rs.root(i).c, rs.root(j).c);
                if (Rational(2) * s != h) here = false;
            }
            if (!here) {
                ok = false;
                if (bad.empty()) bad = id.str();
            }
        }
        report(10, "structural suite: long roots, k Phi+ differences, level sizes, sum identity",
               ok, bad);
    }

    std::printf("---\nacceptance: %s (%d failing criteria)\n", failures == 0 ? "PASS" : "FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
