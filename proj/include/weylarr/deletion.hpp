#pragma once

#include "weylarr/restriction.hpp"

#include <string>
#include <vector>

namespace weylarr {

// The free-ness argument for removing the hyperplane X* = H_{b1} ∩ H_{b2}
// from the restricted arrangement A^{H_{b1}}: for every flat X below X*,
// |A^{H}_X| - |A^{X*}_X| must be a root of chi(A^{H}_X, t).
//
// Flats below X* correspond to subsystems Phi_X = Phi ∩ span({b1,b2} ∪ Γ);
// the localized arrangements decompose by irreducible component, and the
// characteristic polynomial of a component (or its H-restriction) factors
// over its exponents, so root membership is an exact integer test.
struct DeletionFlatCheck {
    std::vector<std::string> component_types; // of Phi_X
    int diff = 0;                             // |A^H_X| - |A^{X*}_X|
    std::vector<long long> chi_roots;         // roots of chi(A^H_X, t)
    bool passed = false;
};

struct DeletionCheckResult {
    bool passed = false;
    int flats_checked = 0;
    std::string detail;
    std::vector<DeletionFlatCheck> failures;
};

// max_local_rank bounds rank(Phi_X); flats of higher rank are skipped
// (rank <= 4 suffices for the argument; ambient rank <= 5 is exhaustive).
DeletionCheckResult combinatorial_deletion_check(const RootSystem& rs, const std::vector<int>& b1,
                                                 const std::vector<int>& b2, int max_local_rank = 4);

} // namespace weylarr
