#pragma once

#include "weylarr/linalg.hpp"
#include "weylarr/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace weylarr {

// Sparse multivariate polynomial with exact rational coefficients.
// Monomials are exponent vectors of fixed length nvars; zero coefficients
// are never stored.
class Poly {
public:
    using Mono = std::vector<int>;

    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly variable(int nvars, int i, int power = 1);
    static Poly linear_form(const IntVec& coeffs); // sum coeffs[i] x_i

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono(nvars_, 0)); }
    Rational constant_value() const; // throws unless constant

    void add_term(const Mono& m, const Rational& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(int var) const;

    // Substitute x_i -> args[i]; all args share a variable count.
    Poly substitute(const std::vector<Poly>& args) const;

    // Substitute x_i -> linear form sum_j m[i][j] y_j (m has one row per
    // current variable; the result has m[0].size() variables).
    Poly substitute_linear(const IntMat& m) const;

    // Exact division: *this = q * d. Returns false if d does not divide.
    bool divide_exact(const Poly& d, Poly& q) const;

    // Canonical text form: terms sorted by the monomial order, exact
    // rational coefficients, e.g. "x0^2*x1 - 1/2*x2".
    std::string str() const;

    const std::map<Mono, Rational>& terms() const { return terms_; }

private:
    int nvars_;
    std::map<Mono, Rational> terms_; // graded-compatible: map keyed by exponent vector (lex)
};

// A polynomial vector field sum coords[i] d/dx_i.
struct Derivation {
    std::vector<Poly> coords;

    int nvars() const { return (int)coords.size(); }
    bool is_zero() const;
    // Common total degree of the nonzero coordinates; -1 if zero; throws
    // if the coordinates are homogeneous of different degrees.
    int degree() const;
    // Apply to a polynomial: sum coords[i] * df/dx_i.
    Poly apply(const Poly& f) const;

    Derivation operator+(const Derivation& o) const;
    Derivation operator*(const Poly& f) const;
    Derivation operator*(const Rational& c) const;

    std::string str() const;
};

Derivation euler_derivation(int nvars);

// phi(alpha_H) divisible by alpha_H for every form (forms as covectors).
bool is_in_derivation_module(const Derivation& phi, const std::vector<IntVec>& forms);

// det of the coefficient matrix M(phi_1..phi_n) by fraction-free Gaussian
// elimination over the polynomial ring.
Poly derivation_matrix_det(const std::vector<Derivation>& phis);

// Saito check: det M = c * prod(forms) with c a nonzero constant.
struct SaitoResult {
    bool passed = false;
    bool det_zero = false;
    Rational factor;      // c when passed
    std::string detail;
};
SaitoResult saito_check(const std::vector<Derivation>& phis, const std::vector<IntVec>& forms);

// Restriction of phi to the subspace X = ker(defining forms): parametrize
// x = P t, solve P g = phi(x)|_{x=Pt} exactly. Throws if the system is
// inconsistent (phi not tangent to X).
Derivation restrict_derivation(const Derivation& phi, const IntMat& parametrization);

// Nullspace parametrization of a set of covectors: columns span ker.
IntMat kernel_parametrization(const std::vector<IntVec>& forms, int nvars);

} // namespace weylarr
