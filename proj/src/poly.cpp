#include "weylarr/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylarr {

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int i, int power) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = power;
    p.add_term(m, Rational(1));
    return p;
}

Poly Poly::linear_form(const IntVec& coeffs) {
    Poly p((int)coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Mono m(coeffs.size(), 0);
        m[i] = 1;
        p.add_term(m, Rational(coeffs[i]));
    }
    return p;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int e : m) s += e;
        if (d == -2) d = s;
        else if (d != s) return false;
    }
    return true;
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, c);
    return p;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly p = a;
    for (const auto& [m, c] : b.terms_) p.add_term(m, -c);
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly p(a.nvars_);
    Poly::Mono m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            p.add_term(m, ca * cb);
        }
    return p;
}

Poly Poly::operator*(const Rational& c) const {
    Poly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [m, coef] : terms_) p.terms_.emplace(m, coef * c);
    return p;
}

Poly Poly::derivative(int var) const {
    Poly p(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d = m;
        d[var] -= 1;
        p.add_term(d, c * Rational(m[var]));
    }
    return p;
}

Poly Poly::substitute(const std::vector<Poly>& args) const {
    if ((int)args.size() != nvars_) throw std::invalid_argument("substitute: arity mismatch");
    int out_vars = args.empty() ? 0 : args[0].nvars();
    Poly result(out_vars);
    for (const auto& [m, c] : terms_) {
        Poly term = Poly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < m[i]; ++e) term *= args[i];
        result += term;
    }
    return result;
}

Poly Poly::substitute_linear(const IntMat& m) const {
    std::vector<Poly> args;
    for (int i = 0; i < nvars_; ++i) args.push_back(Poly::linear_form(m[i]));
    return substitute(args);
}

bool Poly::divide_exact(const Poly& d, Poly& q) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    q = Poly(nvars_);
    Poly r = *this;
    // Repeatedly cancel the leading term under the map order; exact when
    // the remainder reaches zero.
    const auto& dlead = *d.terms_.rbegin();
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        Mono diff(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            diff[i] = rlead.first[i] - dlead.first[i];
            if (diff[i] < 0) return false;
        }
        Rational coef = rlead.second / dlead.second;
        Poly t(nvars_);
        t.add_term(diff, coef);
        q += t;
        r -= t * d;
    }
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // Highest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c < Rational(0);
        Rational a = neg ? -c : c;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            s += a.str();
        } else {
            if (a != Rational(1)) s += a.str() + "*";
            s += vars;
        }
    }
    return s;
}

bool Derivation::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Poly& p) { return p.is_zero(); });
}

int Derivation::degree() const {
    int d = -1;
    for (const Poly& p : coords) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) throw std::domain_error("Derivation: inhomogeneous coordinate");
        if (d == -1) d = p.degree();
        else if (d != p.degree()) throw std::domain_error("Derivation: mixed coordinate degrees");
    }
    return d;
}

Poly Derivation::apply(const Poly& f) const {
    Poly out(f.nvars());
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        out += coords[i] * f.derivative((int)i);
    }
    return out;
}

Derivation Derivation::operator+(const Derivation& o) const {
    Derivation d;
    for (size_t i = 0; i < coords.size(); ++i) d.coords.push_back(coords[i] + o.coords[i]);
    return d;
}

Derivation Derivation::operator*(const Poly& f) const {
    Derivation d;
    for (const Poly& p : coords) d.coords.push_back(p * f);
    return d;
}

Derivation Derivation::operator*(const Rational& c) const {
    Derivation d;
    for (const Poly& p : coords) d.coords.push_back(p * c);
    return d;
}

std::string Derivation::str() const {
    std::string s;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coords[i].str() + ")*d" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

Derivation euler_derivation(int nvars) {
    Derivation d;
    for (int i = 0; i < nvars; ++i) d.coords.push_back(Poly::variable(nvars, i));
    return d;
}

bool is_in_derivation_module(const Derivation& phi, const std::vector<IntVec>& forms) {
    for (const IntVec& f : forms) {
        Poly alpha = Poly::linear_form(f);
        Poly val = phi.apply(alpha);
        Poly q;
        if (!val.divide_exact(alpha, q)) return false;
    }
    return true;
}

namespace {

// Laplace expansion along rows with memoization on the set of used
// columns. For matrices of monomials (the power-sum and eta fields) the
// intermediate minors never combine terms, so this stays linear in the
// size of the expanded determinant, where fraction-free elimination would
// multiply large alternants.
Poly laplace_det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    std::vector<Poly> memo(size_t(1) << n);
    memo[0] = Poly::constant(m[0][0].nvars(), Rational(1));
    // subsets ordered by value visit every subset after its sub-subsets
    for (size_t mask = 1; mask < memo.size(); ++mask) {
        int row = __builtin_popcountll(mask) - 1;
        Poly det(m[0][0].nvars());
        int pos = 0; // index of j within the subset
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (size_t(1) << j))) continue;
            size_t rest = mask ^ (size_t(1) << j);
            if (!m[row][j].is_zero()) {
                Poly term = m[row][j] * memo[rest];
                det = ((row + pos) % 2 == 0) ? det + term : det - term;
            }
            ++pos;
        }
        memo[mask] = std::move(det);
    }
    return memo.back();
}

} // namespace

Poly derivation_matrix_det(const std::vector<Derivation>& phis) {
    size_t n = phis.size();
    if (n == 0 || phis[0].nvars() != (int)n)
        throw std::invalid_argument("derivation matrix must be square");
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = phis[j].coords[i];

    size_t max_terms = 0;
    for (const auto& row : m)
        for (const Poly& p : row) max_terms = std::max(max_terms, p.num_terms());
    if (max_terms <= 2) return laplace_det(m);

    // Bareiss fraction-free elimination; every division is exact.
    Poly prev = Poly::constant((int)n, Rational(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return Poly((int)n); // singular
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                Poly q;
                if (!num.divide_exact(prev, q))
                    throw std::logic_error("Bareiss division was not exact");
                m[i][j] = q;
            }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

SaitoResult saito_check(const std::vector<Derivation>& phis, const std::vector<IntVec>& forms) {
    SaitoResult res;
    Poly det = derivation_matrix_det(phis);
    if (det.is_zero()) {
        res.det_zero = true;
        res.detail = "determinant is zero (dependent derivations)";
        return res;
    }
    int n = phis[0].nvars();
    Poly q = Poly::constant(n, Rational(1));
    for (const IntVec& f : forms) q *= Poly::linear_form(f);
    Poly ratio;
    if (!det.divide_exact(q, ratio)) {
        res.detail = "determinant is not divisible by the defining polynomial";
        return res;
    }
    if (!ratio.is_constant()) {
        res.detail = "determinant / Q is not constant (degree excess " +
                     std::to_string(det.degree() - q.degree()) + ")";
        return res;
    }
    res.factor = ratio.constant_value();
    res.passed = !res.factor.is_zero();
    return res;
}

IntMat kernel_parametrization(const std::vector<IntVec>& forms, int nvars) {
    IntMat rows = forms.empty() ? IntMat{IntVec(nvars, 0)} : IntMat(forms.begin(), forms.end());
    IntMat null_rows = int_nullspace(rows);
    IntMat p(nvars, IntVec(null_rows.size(), 0));
    for (size_t j = 0; j < null_rows.size(); ++j)
        for (int i = 0; i < nvars; ++i) p[i][j] = null_rows[j][i];
    return p;
}

Derivation restrict_derivation(const Derivation& phi, const IntMat& parametrization) {
    int n = phi.nvars();
    int d = parametrization.empty() ? 0 : (int)parametrization[0].size();
    // f_i(P t)
    std::vector<Poly> fp;
    for (int i = 0; i < n; ++i) fp.push_back(phi.coords[i].substitute_linear(parametrization));
    // Choose d independent rows R of P and solve P_R g = f_R, then check
    // the remaining rows as exact polynomial identities.
    IntMat pmat = parametrization;
    std::vector<int> rows_used;
    IntMat ech;
    for (int i = 0; i < n && (int)rows_used.size() < d; ++i) {
        IntMat trial = ech;
        trial.push_back(pmat[i]);
        IntMat t2 = int_row_echelon(trial);
        if ((int)t2.size() > (int)ech.size()) {
            ech = t2;
            rows_used.push_back(i);
        }
    }
    if ((int)rows_used.size() != d) throw std::logic_error("parametrization is rank-deficient");
    RatMat a(d, RatVec(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a[r][c] = Rational(pmat[rows_used[r]][c]);
    // Solve column-wise over the field of fractions by Cramer-free Gauss:
    // treat the polynomial right-hand sides coordinate-by-coordinate via
    // rational elimination on the coefficient matrix.
    // Invert a (d x d rational matrix).
    RatMat inv(d, RatVec(d, Rational(0)));
    {
        RatMat aug(d, RatVec(2 * d, Rational(0)));
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < d; ++j) aug[i][j] = a[i][j];
            aug[i][d + i] = Rational(1);
        }
        for (int col = 0; col < d; ++col) {
            int p = col;
            while (p < d && aug[p][col].is_zero()) ++p;
            if (p == d) throw std::logic_error("selected rows are singular");
            std::swap(aug[p], aug[col]);
            Rational s = Rational(1) / aug[col][col];
            for (int j = 0; j < 2 * d; ++j) aug[col][j] *= s;
            for (int i = 0; i < d; ++i) {
                if (i == col || aug[i][col].is_zero()) continue;
                Rational f = aug[i][col];
                for (int j = 0; j < 2 * d; ++j) aug[i][j] -= f * aug[col][j];
            }
        }
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) inv[i][j] = aug[i][d + j];
    }
    Derivation g;
    for (int r = 0; r < d; ++r) {
        Poly gr(d);
        for (int c = 0; c < d; ++c)
            if (!inv[r][c].is_zero()) gr += fp[rows_used[c]] * inv[r][c];
        g.coords.push_back(gr);
    }
    // Residual check on all rows: P g = f(Pt) exactly.
    for (int i = 0; i < n; ++i) {
        Poly lhs(d);
        for (int c = 0; c < d; ++c)
            if (pmat[i][c] != 0) lhs += g.coords[c] * Rational(pmat[i][c]);
        if (lhs != fp[i])
            throw std::runtime_error("restriction residual is nonzero: derivation not tangent");
    }
    return g;
}

} // namespace weylarr
