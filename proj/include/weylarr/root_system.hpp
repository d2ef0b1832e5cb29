#pragma once

#include "weylarr/linalg.hpp"
#include "weylarr/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace weylarr {

// Irreducible crystallographic families. Admissible ranks:
// A>=1, B>=2, C>=3, D>=4 (D3 is accepted and canonicalized to A3),
// E in {6,7,8}, F4, G2.
struct RootSystemId {
    char family = 'A';
    int rank = 1;

    static RootSystemId parse(const std::string& name); // "E8", "d5", ...
    std::string str() const { return std::string(1, family) + std::to_string(rank); }

    friend bool operator==(const RootSystemId& a, const RootSystemId& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator<(const RootSystemId& a, const RootSystemId& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.family < b.family;
    }
};

bool is_admissible(char family, int rank);

// A root, stored by its integer coordinates over the simple basis.
// Lengths are normalized so that long roots have squared length 2.
struct Root {
    std::vector<int> c;
    int height = 0;
    Rational normsq;

    friend bool operator==(const Root& a, const Root& b) { return a.c == b.c; }
};

// Height profile data around the top of the root poset: the roots above
// height m_{l-1}, their consecutive differences, and the chain of
// highest-root coefficients 1,2,...,c_max read off the extended diagram.
struct HeightProfile {
    std::vector<int> theta_counts;     // t_r = #roots of height r, r = 1..h-1
    std::vector<int> dual_partition;   // sorted; equals the exponents
    std::vector<Root> top_roots;       // U, decreasing height; theta_1 = highest root
    std::vector<std::vector<int>> xi;  // xi_0 = -theta_1, xi_i = theta_i - theta_{i+1}
    std::vector<std::vector<int>> lambda_chain; // -theta, then simple roots with coeffs 2..c_max
    bool case1 = false;                // true iff some <theta_t, xi_t> = 3 (G2 only)
};

struct LemmaReport {
    std::vector<std::pair<std::string, bool>> results; // (name, passed)
    bool all_passed() const;
};

class RootSystem {
public:
    static const RootSystem& get(const RootSystemId& id); // cached, immutable
    static const RootSystem& get(const std::string& name) { return get(RootSystemId::parse(name)); }

    const RootSystemId& id() const { return id_; }
    int rank() const { return id_.rank; }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    // Inner product of simple roots, times 6 (so it is always an integer:
    // squared lengths are 2, 1 or 2/3).
    const IntMat& gram6() const { return gram6_; }

    const std::vector<Root>& positive_roots() const { return positive_; }
    int num_positive() const { return (int)positive_.size(); }
    const Root& highest_root() const { return positive_.back(); }

    int coxeter_number() const { return coxeter_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int c_max() const { return c_max_; }

    // Index of a positive root in the (height, lex) order; -1 if absent.
    int index_of(const std::vector<int>& coeffs) const;
    bool is_root(const std::vector<int>& coeffs) const;       // positive or negative
    bool is_positive_root(const std::vector<int>& coeffs) const;
    const Root& root(int index) const { return positive_[index]; }

    Rational inner(const std::vector<int>& a, const std::vector<int>& b) const;
    Rational normsq(const std::vector<int>& a) const { return inner(a, a); }
    // <a,b> = 2(a,b)/(b,b); integral for roots.
    long long pairing(const std::vector<int>& a, const std::vector<int>& b) const;
    // (a,b)^2 / ((a,a)(b,b)); the square of the cosine between a and b.
    Rational unit_inner_sq(const std::vector<int>& a, const std::vector<int>& b) const;

    // Reflection of b in the hyperplane of a; the image is checked to be a root.
    std::vector<int> reflect(const std::vector<int>& a, const std::vector<int>& b) const;

    // s_{alpha_k} as a permutation on positive roots (alpha_k maps to itself,
    // recording that the true image is its negative).
    const std::vector<int>& simple_reflection_table(int k) const { return refl_table_[k]; }

    // Exponents recomputed from the dual partition of the height
    // distribution; throws if the height counts are not weakly decreasing.
    std::vector<int> exponents_via_dual_partition() const;

    // Exponents from the Cartan eigenvalues 2 + 2cos(m pi / h); requires
    // every eigenvalue to round to an integer within tol.
    struct EigenExponents {
        std::vector<double> raw;      // recovered m-values before rounding
        std::vector<int> rounded;
        double max_residual = 0;
    };
    EigenExponents exponents_via_cartan_eigenvalues(double tol = 1e-9) const;

    HeightProfile height_profile() const; // rank >= 2

    // Structural facts about the top of the root poset (rank >= 3):
    // a long root at height m_{l-1}; theta_i - gamma in kPhi+ (k in 1..3);
    // exactly two roots at height m_{l-1} when rank >= 5; the two-of-three
    // partial sums property on rank <= 4 systems.
    LemmaReport structural_checks() const;

    // Positive roots of the given height.
    std::vector<int> roots_of_height(int h) const;

    bool simply_laced() const { return simply_laced_; }
    bool is_long(const std::vector<int>& a) const { return normsq(a) == Rational(2); }

private:
    RootSystem() = default;
    static RootSystem build(const RootSystemId& id);
    void generate_positive_roots();

    RootSystemId id_;
    std::vector<std::vector<int>> cartan_;
    IntMat gram6_;
    std::vector<Root> positive_;
    std::map<std::vector<int>, int> index_;
    std::vector<std::vector<int>> refl_table_;
    std::vector<int> exponents_;
    int coxeter_ = 0;
    int c_max_ = 0;
    bool simply_laced_ = false;
};

// All admissible ids of rank <= max_rank, in (rank, family) order.
std::vector<RootSystemId> catalog_ids(int max_rank = 8);

} // namespace weylarr
