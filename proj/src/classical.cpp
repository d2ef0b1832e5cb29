#include "weylarr/classical.hpp"

#include "weylarr/subsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylarr {

namespace {

// Simple roots in the usual epsilon coordinates.
std::vector<IntVec> epsilon_simples(char family, int l) {
    auto e = [&](int i) {
        int n = family == 'A' ? l + 1 : l;
        IntVec v(n, 0);
        v[i] = 1;
        return v;
    };
    auto sub = [&](IntVec a, const IntVec& b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
        return a;
    };
    auto add = [&](IntVec a, const IntVec& b) {
        for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
        return a;
    };
    std::vector<IntVec> s;
    for (int i = 0; i + 1 < l; ++i) s.push_back(sub(e(i), e(i + 1)));
    switch (family) {
        case 'A': s.push_back(sub(e(l - 1), e(l))); break;
        case 'B': s.push_back(e(l - 1)); break;
        case 'C': {
            IntVec v = e(l - 1);
            v[l - 1] = 2;
            s.push_back(v);
            break;
        }
        case 'D': s.push_back(add(e(l - 2), e(l - 1))); break;
        default: throw std::invalid_argument("classical embedding needs family A/B/C/D");
    }
    return s;
}

} // namespace

ClassicalEmbedding classical_embedding(const RootSystem& rs) {
    char f = rs.id().family;
    int l = rs.rank();
    if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
        throw std::invalid_argument("classical embedding not available for " + rs.id().str());
    ClassicalEmbedding emb;
    emb.id = rs.id();
    std::vector<IntVec> simples = epsilon_simples(f, l);
    if (f == 'A') {
        // Project out the diagonal by substituting x_{l+1} = -(x_1+...+x_l):
        // the covector e_i maps to e_i for i <= l and e_{l+1} to -(1,...,1).
        emb.ncoords = l;
        for (auto& s : simples) {
            IntVec t(l, 0);
            for (int j = 0; j < l; ++j) t[j] = s[j] - s[l];
            s = t;
        }
    } else {
        emb.ncoords = l;
    }
    emb.simple_forms = simples;
    return emb;
}

ClassicalEmbedding d3_embedding(const RootSystem& a3) {
    if (!(a3.id().family == 'A' && a3.rank() == 3))
        throw std::invalid_argument("d3_embedding expects A3");
    ClassicalEmbedding emb;
    emb.id = a3.id();
    emb.ncoords = 3;
    // A3's middle node is the D3 fork: a1 -> e2-e3, a2 -> e1-e2, a3 -> e2+e3.
    emb.simple_forms = {{0, 1, -1}, {1, -1, 0}, {0, 1, 1}};
    return emb;
}

ClassicalEmbedding embedding_for_pair(const RootSystem& rs, bool ro) {
    if (ro && rs.id().family == 'A' && rs.rank() == 3) return d3_embedding(rs);
    return classical_embedding(rs);
}

IntVec ClassicalEmbedding::form_of_root(const std::vector<int>& root) const {
    IntVec out(ncoords, 0);
    for (size_t i = 0; i < root.size(); ++i) {
        if (root[i] == 0) continue;
        for (int j = 0; j < ncoords; ++j) out[j] += root[i] * simple_forms[i][j];
    }
    return primitive_covector(out);
}

std::vector<IntVec> weyl_arrangement_forms(const RootSystem& rs, const ClassicalEmbedding& emb) {
    std::set<IntVec> forms;
    for (int i = 0; i < rs.num_positive(); ++i) forms.insert(emb.form_of_root(rs.root(i).c));
    if ((int)forms.size() != rs.num_positive())
        throw std::logic_error("two roots mapped to one hyperplane in the embedding");
    return std::vector<IntVec>(forms.begin(), forms.end());
}

Derivation tau_derivation(int l, int i) {
    Derivation d;
    for (int k = 0; k < l; ++k) d.coords.push_back(Poly::variable(l, k, 2 * i - 1));
    return d;
}

Derivation eta_derivation(int l) {
    Derivation d;
    for (int k = 0; k < l; ++k) {
        Poly::Mono m(l, 1);
        m[k] = 0;
        Poly p(l);
        p.add_term(m, Rational(1));
        d.coords.push_back(p);
    }
    return d;
}

Derivation d_family_phi(int l) {
    Derivation d;
    for (int k = 0; k < l; ++k) d.coords.push_back(Poly(l));
    for (int lead : {0, 1}) {
        Poly p = Poly::constant(l, Rational(1));
        for (int k = 2; k < l; ++k) {
            Poly f = Poly::variable(l, lead, 2) - Poly::variable(l, k, 2);
            p *= f;
        }
        d.coords[lead] = p;
    }
    return d;
}

std::vector<Derivation> classical_basis(const RootSystem& rs) {
    char f = rs.id().family;
    int l = rs.rank();
    std::vector<Derivation> basis;
    switch (f) {
        case 'B':
        case 'C':
            for (int i = 1; i <= l; ++i) basis.push_back(tau_derivation(l, i));
            break;
        case 'D':
            for (int i = 1; i + 1 <= l; ++i) basis.push_back(tau_derivation(l, i));
            basis.push_back(eta_derivation(l));
            break;
        case 'A': {
            // Power sums on l+1 coordinates, corrected by the radial field
            // so each is tangent to the sum-zero hyperplane, then written in
            // the coordinates x_1..x_l of that hyperplane.
            int n = l + 1;
            Derivation theta0;
            for (int k = 0; k < n; ++k) theta0.coords.push_back(Poly::constant(n, Rational(1)));
            IntMat param(n, IntVec(l, 0)); // x_i = t_i, x_{l+1} = -sum t
            for (int i = 0; i < l; ++i) param[i][i] = 1;
            for (int j = 0; j < l; ++j) param[n - 1][j] = -1;
            for (int j = 1; j <= l; ++j) {
                Derivation tau;
                for (int k = 0; k < n; ++k) tau.coords.push_back(Poly::variable(n, k, j));
                Poly pj(n); // power sum
                for (int k = 0; k < n; ++k) pj += Poly::variable(n, k, j);
                Derivation corrected = tau + theta0 * (pj * Rational(-1, n));
                basis.push_back(restrict_derivation(corrected, param));
            }
            break;
        }
        default:
            throw std::invalid_argument("no classical basis for family " +
                                        std::string(1, f) + " (exceptional types are out of scope)");
    }
    // Degrees must be the exponents, in order.
    std::vector<int> degs;
    for (const Derivation& d : basis) degs.push_back(d.degree());
    std::vector<int> sorted_degs = degs;
    std::sort(sorted_degs.begin(), sorted_degs.end());
    if (sorted_degs != rs.exponents())
        throw std::logic_error("classical basis degrees do not match the exponents");
    std::sort(basis.begin(), basis.end(), [](const Derivation& a, const Derivation& b) {
        return a.degree() < b.degree();
    });
    return basis;
}

std::vector<IntVec> restricted_forms(const std::vector<IntVec>& all_forms,
                                     const std::vector<IntVec>& defining, const IntMat& param) {
    IntMat def_ech = int_row_echelon(IntMat(defining.begin(), defining.end()));
    int d = param.empty() ? 0 : (int)param[0].size();
    std::set<IntVec> dedup;
    std::vector<IntVec> out;
    for (const IntVec& f : all_forms) {
        IntVec res = echelon_residual(def_ech, f);
        if (std::all_of(res.begin(), res.end(), [](long long x) { return x == 0; })) continue;
        IntVec r(d, 0);
        for (int j = 0; j < d; ++j) {
            long long s = 0;
            for (size_t i = 0; i < param.size(); ++i) s += f[i] * param[i][j];
            r[j] = s;
        }
        IntVec key = primitive_covector(r);
        if (dedup.insert(key).second) out.push_back(key);
    }
    return out;
}

BasisRestrictionResult verify_basis_restriction(const RootSystem& rs, const std::vector<int>& b1,
                                                const std::vector<int>& b2) {
    PairClassification pc_check = classify_pair(rs, b1, b2);
    BasisRestrictionResult out;
    out.ro = pc_check.is_ro;
    if (!pc_check.is_a12) {
        out.detail = "pair is not A1^2";
        return out;
    }
    int l = rs.rank();
    ClassicalEmbedding emb = embedding_for_pair(rs, pc_check.is_ro);
    std::vector<IntVec> all_forms = weyl_arrangement_forms(rs, emb);
    IntVec f1 = emb.form_of_root(pc_check.beta1), f2 = emb.form_of_root(pc_check.beta2);
    IntMat param = kernel_parametrization({f1, f2}, emb.ncoords);
    std::vector<IntVec> q_forms = restricted_forms(all_forms, {f1, f2}, param);

    std::vector<Derivation> basis = classical_basis(rs);
    // Expected restricted exponents.
    std::vector<int> exps = rs.exponents();
    std::vector<int> removed;
    if (out.ro) {
        removed = {rs.coxeter_number() / 2, exps[l - 1]};
    } else {
        removed = {exps[l - 2], exps[l - 1]};
    }
    std::vector<int> expected = exps;
    for (int r : removed) {
        auto it = std::find(expected.begin(), expected.end(), r);
        if (it == expected.end()) {
            out.detail = "removed exponent " + std::to_string(r) + " is not an exponent";
            return out;
        }
        expected.erase(it);
    }
    out.expected = expected;

    std::vector<Derivation> restricted;
    if (out.ro) {
        if (rs.id().family != 'D' && !(rs.id().family == 'A' && l == 3)) {
            out.detail = "RO pair outside family D";
            return out;
        }
        // tau_1..tau_{l-2} restrict to a basis. eta vanishes on the
        // coordinate RO flat; on the other D4 orbits it survives but is
        // dependent on the tau restrictions.
        Derivation eta = eta_derivation(l);
        Derivation eta_x = restrict_derivation(eta, param);
        out.eta_vanished = eta_x.is_zero();
        out.dropped = out.eta_vanished ? "eta" : "eta (nonzero but dependent)";
        for (int i = 1; i + 2 <= l; ++i)
            restricted.push_back(restrict_derivation(tau_derivation(l, i), param));
    } else {
        for (int i = 0; i + 2 < l; ++i) restricted.push_back(restrict_derivation(basis[i], param));
        out.dropped = "top two degrees";
    }
    for (const Derivation& d : restricted) out.degrees.push_back(d.degree());
    if (out.degrees != expected) {
        out.detail = "restricted degrees do not match the expected exponents";
        return out;
    }
    SaitoResult sr = saito_check(restricted, q_forms);
    if (!sr.passed) {
        out.detail = "Saito check failed: " + sr.detail;
        return out;
    }
    if ((int)q_forms.size() != std::accumulate(expected.begin(), expected.end(), 0)) {
        out.detail = "degree sum does not match |A^X|";
        return out;
    }
    out.passed = true;
    return out;
}

} // namespace weylarr
