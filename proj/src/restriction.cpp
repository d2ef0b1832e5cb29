#include "weylarr/restriction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace weylarr {

namespace {

IntVec to_ll(const std::vector<int>& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

// Covector of the hyperplane of alpha, as a functional on root coordinates:
// v -> (v, alpha), scaled by 6.
IntVec root_covector(const RootSystem& rs, const std::vector<int>& alpha) {
    int l = rs.rank();
    IntVec cov(l, 0);
    for (int i = 0; i < l; ++i) {
        long long s = 0;
        for (int j = 0; j < l; ++j) s += rs.gram6()[i][j] * alpha[j];
        cov[i] = s;
    }
    return cov;
}

} // namespace

RestrictionClasses restriction_classes(const RootSystem& rs,
                                       const std::vector<std::vector<int>>& defining) {
    if (defining.empty()) throw std::invalid_argument("restriction: empty defining set");
    IntMat def_rows;
    for (const auto& d : defining) def_rows.push_back(to_ll(d));
    IntMat def_ech = int_row_echelon(def_rows);
    if (def_ech.size() != defining.size())
        throw std::invalid_argument("restriction: defining roots are dependent");

    // X = intersection of the defining hyperplanes; its parametrization is
    // the nullspace of the defining covectors.
    IntMat covs;
    for (const auto& d : defining) covs.push_back(root_covector(rs, d));
    IntMat basis = int_nullspace(covs); // rows span X
    RestrictionClasses rc;
    int dim_x = (int)basis.size();
    rc.parametrization.assign(rs.rank(), IntVec(dim_x, 0));
    for (int j = 0; j < dim_x; ++j)
        for (int i = 0; i < rs.rank(); ++i) rc.parametrization[i][j] = basis[j][i];

    std::map<IntVec, int> class_of_form;
    for (int i = 0; i < rs.num_positive(); ++i) {
        const std::vector<int>& alpha = rs.root(i).c;
        // Localized hyperplanes (X inside H_alpha) are exactly the roots in
        // the span of the defining set.
        IntVec res = echelon_residual(def_ech, to_ll(alpha));
        if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; })) {
            ++rc.localized;
            continue;
        }
        IntVec cov = root_covector(rs, alpha);
        IntVec restricted(dim_x, 0);
        for (int j = 0; j < dim_x; ++j) {
            long long s = 0;
            for (int k = 0; k < rs.rank(); ++k) s += cov[k] * rc.parametrization[k][j];
            restricted[j] = s;
        }
        IntVec key = primitive_covector(restricted);
        auto it = class_of_form.find(key);
        if (it == class_of_form.end()) {
            class_of_form.emplace(key, (int)rc.classes.size());
            rc.classes.push_back({i});
            rc.forms.push_back(key);
        } else {
            rc.classes[it->second].push_back(i);
        }
    }
    return rc;
}

int restriction_size(const RootSystem& rs, const std::vector<std::vector<int>>& defining) {
    return restriction_classes(rs, defining).size();
}

NeighborhoodDecomposition neighborhood_decomposition(const RootSystem& rs,
                                                     const std::vector<int>& b1,
                                                     const std::vector<int>& b2) {
    PairClassification pc = classify_pair(rs, b1, b2);
    if (!pc.is_a12) throw std::invalid_argument("neighborhood_decomposition: pair is not A1^2");

    NeighborhoodDecomposition nd;
    RestrictionClasses rc = restriction_classes(rs, {pc.beta1, pc.beta2});
    nd.restriction_count = rc.size();
    int i1 = rs.index_of(pc.beta1), i2 = rs.index_of(pc.beta2);

    for (const auto& cls : rc.classes) {
        Subsystem psi = span_subsystem(rs, {pc.beta1, pc.beta2, rs.root(cls[0]).c});
        if (psi.rank != 3) throw std::logic_error("restriction class of rank != 3");
        size_t ncomp = psi.components.size();
        if (psi.irreducible()) {
            nd.n0.push_back(std::move(psi));
        } else if (ncomp == 3) {
            nd.n3.push_back(std::move(psi));
        } else {
            // A1 x (irreducible rank 2); the A1 factor must be one of the pair.
            int a1_base = -1;
            for (size_t c = 0; c < ncomp; ++c)
                if (psi.components[c].size() == 1 &&
                    psi.type_label[1 - c].rank == 2) // the other component
                    a1_base = psi.base[psi.components[c][0]];
            if (a1_base == i2)
                nd.n1.push_back(std::move(psi));
            else if (a1_base == i1)
                nd.n2.push_back(std::move(psi));
            else
                throw std::logic_error("A1 factor of a neighbor is neither defining root");
        }
    }

    // K-sums: cosine-squared sums over the positive roots of each neighbor.
    auto k_over = [&](const std::vector<Subsystem>& list, const std::vector<int>& beta) {
        Rational k(0);
        int bi = rs.index_of(beta);
        for (const Subsystem& psi : list)
            for (int r : psi.positive)
                if (r != bi) k += rs.unit_inner_sq(beta, rs.root(r).c);
        return k;
    };
    nd.k0 = k_over(nd.n0, pc.beta1);
    Rational k0b = k_over(nd.n0, pc.beta2);
    if (nd.k0 != k0b)
        throw std::logic_error("K_0 differs between the two defining roots");
    // For the reducible neighbors the orthogonal A1 factor contributes 0,
    // so summing over Psi+ equals summing over Lambda+.
    nd.k1 = k_over(nd.n1, pc.beta1);
    nd.k2 = k_over(nd.n2, pc.beta2);
    return nd;
}

CardinalityCheck verify_card_theorem(const RootSystem& rs, const std::vector<int>& b1,
                                     const std::vector<int>& b2) {
    PairClassification pc = classify_pair(rs, b1, b2);
    if (!pc.is_a12) throw std::invalid_argument("verify_card_theorem: pair is not A1^2");
    CardinalityCheck cc;
    cc.ro = pc.is_ro;
    NeighborhoodDecomposition nd = neighborhood_decomposition(rs, b1, b2);
    cc.k0 = nd.k0;
    cc.k1 = nd.k1;
    cc.k2 = nd.k2;
    cc.size_x = nd.restriction_count;
    cc.size_h1 = restriction_size(rs, {pc.beta1});
    cc.size_h2 = restriction_size(rs, {pc.beta2});
    cc.diff1 = cc.size_h1 - cc.size_x;
    cc.diff2 = cc.size_h2 - cc.size_x;

    int l = rs.rank(), h = rs.coxeter_number();
    long long m_top = rs.exponents()[l - 1], m_second = rs.exponents()[l - 2];
    cc.expected = cc.ro ? h / 2 : m_second;

    cc.passed = true;
    auto fail = [&](const std::string& why) {
        cc.passed = false;
        if (!cc.detail.empty()) cc.detail += "; ";
        cc.detail += why;
    };
    // |A^{H_i}| - |A^X| = h/2 + K_{other}(b_i), both i
    if (Rational(2) * (cc.k0 + cc.k1 + Rational(1)) != Rational(h)) fail("2(K0+K1+1) != h");
    if (Rational(2) * (cc.k0 + cc.k2 + Rational(1)) != Rational(h)) fail("2(K0+K2+1) != h");
    if (Rational(cc.diff1) != Rational(h, 2) + cc.k1) fail("diff1 != h/2 + K_{b2}(b1)");
    if (Rational(cc.diff2) != Rational(h, 2) + cc.k2) fail("diff2 != h/2 + K_{b1}(b2)");
    if (Rational(cc.diff1) != Rational(m_top) - cc.k0) fail("diff1 != m_l - K0");
    if (cc.diff1 != cc.expected) fail("diff1 != expected");
    if (cc.diff2 != cc.expected) fail("diff2 != expected");
    return cc;
}

TopRootPartition appendix_bijection_check(const RootSystem& rs, const std::vector<int>& g1,
                                          const std::vector<int>& g2) {
    TopRootPartition out;
    int l = rs.rank();
    int m_second = rs.exponents()[l - 2];
    HeightProfile hp = rs.height_profile();
    NeighborhoodDecomposition nd = neighborhood_decomposition(rs, g1, g2);

    std::set<int> u_global;
    for (const Root& r : hp.top_roots) u_global.insert(rs.index_of(r.c));
    out.global = (long long)rs.exponents()[1] - 1;

    std::set<int> u_union;
    auto fail = [&](const std::string& why) {
        out.passed = false;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += why;
    };
    out.passed = true;
    if (rs.root(rs.index_of(g1)).height != m_second || rs.root(rs.index_of(g2)).height != m_second)
        fail("pair is not at height m_{l-1}");
    for (const Subsystem& psi : nd.n0) {
        // rank-3 irreducible: h(Psi) = 2 m_2(Psi)
        long long h_psi = 2 * (long long)psi.positive.size() / 3;
        long long m2_psi = h_psi / 2;
        out.local_sum += m2_psi - 1;
        long long lh1 = psi.local_height(g1), lh2 = psi.local_height(g2);
        if (lh1 != m2_psi || lh2 != m2_psi) fail("local height of gamma_i != m_2(Psi) in " + psi.type_str());
        for (int r : psi.positive) {
            if (psi.local_height(rs.root(r).c) > m2_psi) {
                if (!u_union.insert(r).second) fail("U_Psi sets are not disjoint");
                if (!u_global.count(r)) fail("U_Psi member outside U");
            }
        }
    }
    if (u_union != u_global) fail("union of U_Psi != U");
    if (out.local_sum != out.global) fail("sum of (m_2(Psi)-1) != m_2 - 1");
    return out;
}

} // namespace weylarr
