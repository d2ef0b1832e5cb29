#pragma once

#include "weylarr/subsystem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylarr {

// Restriction of the Weyl arrangement to the flat X cut out by a set of
// root hyperplanes. Two roots outside Phi_X define the same hyperplane of
// A^X iff each lies in the span of the defining roots plus the other.
struct RestrictionClasses {
    std::vector<std::vector<int>> classes; // positive-root indices, grouped
    std::vector<IntVec> forms;             // primitive covector of each class on X
    IntMat parametrization;                // columns: basis of X (root coordinates)
    int localized = 0;                     // |A_X| = roots vanishing on X (positive count)
    int size() const { return (int)classes.size(); }
};

RestrictionClasses restriction_classes(const RootSystem& rs,
                                       const std::vector<std::vector<int>>& defining);

// |A^X|.
int restriction_size(const RootSystem& rs, const std::vector<std::vector<int>>& defining);

// The rank-3 neighborhood decomposition of an A1^2 pair: every restriction
// class Y gives a rank-3 subsystem Phi_Y containing {b1, b2}; it is either
// irreducible (N0), of shape A1 x (irreducible rank 2) with the A1 factor
// +-b2 or +-b1 (N1 / N2), or A1^3 (N3).
struct NeighborhoodDecomposition {
    std::vector<Subsystem> n0, n1, n2, n3;
    Rational k0, k1, k2; // K_0, K_{b2}(b1), K_{b1}(b2)
    int restriction_count = 0; // |A^X| = |N0|+|N1|+|N2|+|N3|
};

NeighborhoodDecomposition neighborhood_decomposition(const RootSystem& rs,
                                                     const std::vector<int>& b1,
                                                     const std::vector<int>& b2);

// The cardinality identity for an A1^2 pair:
//   |A^{H_i}| - |A^X| = h/2 + K_{other}(b_i) = m_l - K_0,
// equal to h/2 when the pair is RO and to m_{l-1} otherwise.
struct CardinalityCheck {
    bool ro = false;
    int size_x = 0;          // |A^X|
    int size_h1 = 0, size_h2 = 0;
    long long diff1 = 0, diff2 = 0;
    Rational k0, k1, k2;
    long long expected = 0;  // h/2 or m_{l-1}
    bool passed = false;
    std::string detail;      // set when failed
};

CardinalityCheck verify_card_theorem(const RootSystem& rs, const std::vector<int>& b1,
                                     const std::vector<int>& b2);

// U_Psi bookkeeping for the partition of the top roots among the
// irreducible rank-3 neighbors of a pair of second-top-height roots.
struct TopRootPartition {
    bool passed = false;
    std::string detail;
    long long local_sum = 0;  // sum of (m_2(Psi) - 1)
    long long global = 0;     // m_2 - 1
};

TopRootPartition appendix_bijection_check(const RootSystem& rs, const std::vector<int>& g1,
                                          const std::vector<int>& g2);

} // namespace weylarr
