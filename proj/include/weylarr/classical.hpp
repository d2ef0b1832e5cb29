#pragma once

#include "weylarr/poly.hpp"
#include "weylarr/root_system.hpp"

#include <string>
#include <vector>

namespace weylarr {

// Euclidean realization of the classical families, mapping roots given over
// the simple basis to integer hyperplane forms in coordinates where the
// defining polynomial takes its textbook shape:
//   A_l : x_i - x_j                       (l coordinates after projecting out
//                                          the diagonal of the usual l+1)
//   B_l : x_i, x_i - x_j, x_i + x_j
//   C_l : same hyperplanes as B_l
//   D_l : x_i - x_j, x_i + x_j
struct ClassicalEmbedding {
    RootSystemId id;
    int ncoords = 0;                 // number of coordinates forms live in
    std::vector<IntVec> simple_forms; // form of each simple root

    IntVec form_of_root(const std::vector<int>& root) const; // primitive
};

ClassicalEmbedding classical_embedding(const RootSystem& rs); // family A/B/C/D

// The rank-3 D realization of A3 (forms x_i - x_j, x_i + x_j in 3
// coordinates), keyed to Bourbaki A3 numbering. Used for the RO flats.
ClassicalEmbedding d3_embedding(const RootSystem& a3);

// Embedding used by the derivation checks on the given pair: the D
// realization when the pair is RO (families D and A3), the family
// realization otherwise.
ClassicalEmbedding embedding_for_pair(const RootSystem& rs, bool ro);

// All hyperplane forms of the Weyl arrangement in embedding coordinates.
std::vector<IntVec> weyl_arrangement_forms(const RootSystem& rs, const ClassicalEmbedding& emb);

// A homogeneous basis of the derivation module with degrees equal to the
// exponents. B/C/D use odd power sums (D swaps the top one for the product
// field eta); A uses power sums corrected to be tangent to the sum-zero
// hyperplane and then written in the projected coordinates.
std::vector<Derivation> classical_basis(const RootSystem& rs);

// eta = sum_k (x_1...x_l / x_k) d_k on l coordinates.
Derivation eta_derivation(int l);
// tau_i = sum_k x_k^(2i-1) d_k.
Derivation tau_derivation(int l, int i);
// The degree-2(l-2) field phi = (prod_{k>=3}(x1^2-xk^2)) d_1 + (prod_{k>=3}(x2^2-xk^2)) d_2,
// which lies in D(A \ {x1+x2}) for the D_l arrangement.
Derivation d_family_phi(int l);

// Restriction-basis verification on an A1^2 flat X:
//  * non-RO: the l-2 lowest-degree basis derivations restrict to a basis of
//    D(A^X) (Saito check against the product of the restricted forms);
//  * RO (family D): additionally eta^X = 0 and the restricted exponents
//    are {1, 3, ..., 2l-5}.
struct BasisRestrictionResult {
    bool passed = false;
    bool ro = false;
    bool eta_vanished = false;       // RO flats: whether eta^X = 0 (true on the
                                     // coordinate flat x_i = x_j = 0; the other
                                     // D4 triality orbits keep a nonzero eta^X)
    std::vector<int> degrees;        // degrees of the restricted basis
    std::vector<int> expected;       // exp(A) minus the removed pair
    std::string dropped;             // which derivation vanished / went dependent
    std::string detail;
};

BasisRestrictionResult verify_basis_restriction(const RootSystem& rs, const std::vector<int>& b1,
                                                const std::vector<int>& b2);

// Restricted arrangement forms on X = ker(f1) ∩ ker(f2) (one representative
// per restriction class, coprime integer coefficients, positive lead).
std::vector<IntVec> restricted_forms(const std::vector<IntVec>& all_forms,
                                     const std::vector<IntVec>& defining, const IntMat& param);

} // namespace weylarr
