#pragma once

#include "weylarr/rational.hpp"

#include <vector>

namespace weylarr {

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Exact linear algebra on small dense matrices (everything here is at most
// ~9 columns and ~80 rows). Integer routines use fraction-free elimination;
// rational routines use plain Gauss with exact pivots.

// Rank of an integer matrix (rows may be modified copies).
int int_rank(IntMat m);

// True if v lies in the row space of m.
bool in_row_span(const IntMat& m, const IntVec& v);

// Row-reduce m into an integer echelon basis of its row space
// (rows primitive: gcd 1, leading entry positive).
IntMat int_row_echelon(IntMat m);

// Reduce v against an echelon basis (as produced by int_row_echelon);
// returns the residual, zero iff v is in the span.
IntVec echelon_residual(const IntMat& echelon, IntVec v);

// Integer kernel of m (solutions x of m x = 0), as echelonized primitive
// rows spanning the kernel over Q.
IntMat int_nullspace(const IntMat& m);

// Solve A x = b exactly over Q. A must have full column rank; if the
// system is inconsistent, returns false.
bool solve_rational(const RatMat& a, const RatVec& b, RatVec& x);

// Normalize a rational covector to a primitive integer covector with the
// first nonzero entry positive. Zero vector is rejected.
IntVec primitive_covector(const RatVec& v);

// Same for an integer covector.
IntVec primitive_covector(IntVec v);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations,
// sorted ascending. Matrices here are at most 9x9.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a);

} // namespace weylarr
