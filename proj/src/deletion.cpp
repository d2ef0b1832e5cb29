#include "weylarr/deletion.hpp"

#include "weylarr/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace weylarr {

namespace {

IntVec to_ll(const std::vector<int>& v) { return IntVec(v.begin(), v.end()); }

// Count hyperplane classes of the localized arrangement of `roots` (positive
// indices) restricted to the flat cut out by `defining` inside it: roots in
// the span of `defining` are the localized ones, the rest group by
// span(defining ∪ {alpha}).
int localized_restriction_size(const RootSystem& rs, const std::vector<int>& roots,
                               const std::vector<std::vector<int>>& defining) {
    IntMat rows;
    for (const auto& d : defining) rows.push_back(to_ll(d));
    IntMat def_ech = int_row_echelon(rows);
    std::set<IntMat> classes;
    for (int i : roots) {
        IntVec res = echelon_residual(def_ech, to_ll(rs.root(i).c));
        if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; })) continue;
        IntMat span = rows;
        span.push_back(to_ll(rs.root(i).c));
        classes.insert(int_row_echelon(span));
    }
    return (int)classes.size();
}

} // namespace

DeletionCheckResult combinatorial_deletion_check(const RootSystem& rs, const std::vector<int>& b1,
                                                 const std::vector<int>& b2, int max_local_rank) {
    PairClassification pc = classify_pair(rs, b1, b2);
    if (!pc.is_a12)
        throw std::invalid_argument("combinatorial_deletion_check: pair is not A1^2");
    DeletionCheckResult out;
    out.passed = true;

    // Flats of the doubly-restricted arrangement = subsystems containing
    // both defining roots, enumerated by span closure up to max_local_rank.
    std::set<std::vector<int>> seen; // sorted positive index sets
    std::vector<std::vector<int>> flats;
    {
        Subsystem s0 = span_subsystem(rs, {pc.beta1, pc.beta2});
        seen.insert(s0.positive);
        flats.push_back(s0.positive);
    }
    std::vector<std::vector<int>> frontier = flats;
    int rank = 2;
    while (rank < max_local_rank && !frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& flat : frontier) {
            std::vector<std::vector<int>> gens;
            for (int i : flat) gens.push_back(rs.root(i).c);
            for (int d = 0; d < rs.num_positive(); ++d) {
                if (std::binary_search(flat.begin(), flat.end(), d)) continue;
                gens.push_back(rs.root(d).c);
                Subsystem s = span_subsystem(rs, gens);
                gens.pop_back();
                if (seen.insert(s.positive).second) {
                    next.push_back(s.positive);
                    flats.push_back(s.positive);
                }
            }
        }
        frontier = std::move(next);
        ++rank;
    }

    for (const auto& flat : flats) {
        std::vector<std::vector<int>> gens;
        for (int i : flat) gens.push_back(rs.root(i).c);
        Subsystem sub = span_subsystem(rs, gens);

        DeletionFlatCheck fc;
        int size_h = localized_restriction_size(rs, sub.positive, {pc.beta1});
        int size_xstar = localized_restriction_size(rs, sub.positive, {pc.beta1, pc.beta2});
        fc.diff = size_h - size_xstar;

        // chi(A^H_X) factors componentwise; the component holding b1 loses
        // its top exponent under the H-restriction.
        int i1 = rs.index_of(pc.beta1);
        for (size_t ci = 0; ci < sub.components.size(); ++ci) {
            fc.component_types.push_back(sub.type_label[ci].str());
            IntMat crows;
            for (int pos : sub.components[ci]) crows.push_back(to_ll(rs.root(sub.base[pos]).c));
            IntMat cech = int_row_echelon(crows);
            IntVec res = echelon_residual(cech, to_ll(rs.root(i1).c));
            bool holds_b1 = std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; });
            CatalogEntry ce = catalog_entry(sub.type_label[ci]);
            std::vector<int> exps = ce.exponents;
            if (holds_b1) exps.pop_back(); // restriction removes the largest exponent
            for (int m : exps) fc.chi_roots.push_back(m);
        }
        std::sort(fc.chi_roots.begin(), fc.chi_roots.end());
        fc.passed = std::binary_search(fc.chi_roots.begin(), fc.chi_roots.end(), (long long)fc.diff);
        ++out.flats_checked;
        if (!fc.passed) {
            out.passed = false;
            out.failures.push_back(fc);
        }
    }
    if (!out.passed)
        out.detail = std::to_string(out.failures.size()) + " flats failed the root-membership test";
    return out;
}

} // namespace weylarr
