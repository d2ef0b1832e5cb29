#pragma once

#include "weylarr/root_system.hpp"

#include <string>
#include <vector>

namespace weylarr {

// A parabolic subsystem Phi ∩ span(Gamma), carried by indices into the
// ambient positive system.
struct Subsystem {
    const RootSystem* ambient = nullptr;
    std::vector<int> positive;             // indices into ambient positive roots
    std::vector<int> base;                 // indices of the induced simple system
    std::vector<std::vector<int>> components; // partition of base (positions into base)
    std::vector<RootSystemId> type_label;  // one per component, same order
    int rank = 0;

    bool irreducible() const { return components.size() == 1; }
    std::string type_str() const; // e.g. "A1 x B2"

    // Coefficients of a member root over the base; entries are nonnegative
    // integers for positive members.
    std::vector<long long> base_coefficients(const std::vector<int>& root) const;

    // Sum of base coefficients. Throws if root is not in the subsystem.
    long long local_height(const std::vector<int>& root) const;

    // Highest root of an irreducible component (position into components).
    std::vector<int> component_highest_root(int comp) const;

    // Coxeter number of a component: 2 |Psi+| / rank(Psi).
    int component_coxeter_number(int comp) const;

    // Largest coefficient of the component's highest root over its base.
    long long component_c_max(int comp) const;

    int component_of_base_vector(const std::vector<int>& root) const;
};

Subsystem span_subsystem(const RootSystem& rs, const std::vector<std::vector<int>>& gamma);

// Classify the pair {b1, b2} (non-proportional roots, coefficient vectors).
struct PairClassification {
    std::vector<int> beta1, beta2; // sign-normalized (positive roots)
    bool is_orthogonal = false;
    bool is_a12 = false;
    bool is_ro = false;
    RootSystemId span_type{'A', 1}; // type of Phi ∩ span{b1,b2} when irreducible,
    bool span_irreducible = false;  // A1 x A1 pairs report is_a12 instead
};

PairClassification classify_pair(const RootSystem& rs, std::vector<int> b1, std::vector<int> b2);

// Canonical unordered pair of positive-root indices.
using PairKey = std::pair<int, int>;

struct PairOrbit {
    PairKey representative;    // lexicographically least member
    std::vector<PairKey> members;
    bool ro = false;           // constant on the orbit (checked)
};

// All A1^2 sets (unordered pairs of positive roots up to sign), partitioned
// into Weyl-group orbits via the simple reflections. Rank >= 3.
std::vector<PairOrbit> pair_orbits(const RootSystem& rs);

// All A1^2 pairs, unpartitioned.
std::vector<PairKey> all_a12_pairs(const RootSystem& rs);

// theta-perp: the subsystem of roots orthogonal to the highest root,
// with per-component Coxeter numbers.
struct ThetaPerp {
    Subsystem sub;
    std::vector<int> component_coxeter; // per component
};

ThetaPerp theta_perp_decomposition(const RootSystem& rs);

} // namespace weylarr
