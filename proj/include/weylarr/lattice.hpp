#pragma once

#include "weylarr/linalg.hpp"

#include <string>
#include <vector>

namespace weylarr {

// chi(A, t) as integer coefficients, index = power of t.
struct CharPoly {
    std::vector<long long> coeff;
    std::string str() const;
    long long eval(long long t) const;
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeff == b.coeff; }
};

// Expand prod (t - r) over the given roots in ambient degree = roots.size().
CharPoly char_poly_from_roots(const std::vector<long long>& roots);

// Characteristic polynomial of a central arrangement given by pairwise
// non-proportional integer linear forms in `dim` variables. Builds the
// intersection lattice with flats keyed by the hyperplanes containing them
// and runs the Mobius recursion top-down.
//
// The engine refuses dim > max_dim (default 6) or more than 80 hyperplanes;
// callers treat that as "skipped".
struct LatticeBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CharPoly char_poly(const std::vector<IntVec>& forms, int dim, int max_dim = 6);

// Point count over F_p of the complement of the arrangement; equals
// chi(A, p) for primes of good reduction. Brute force, dim <= 3 only.
long long complement_point_count(const std::vector<IntVec>& forms, int dim, long long p);

} // namespace weylarr
