#pragma once

#include "ehrhart/rational.hpp"

namespace ehrhart {

Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const RatVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

RatVec to_rational(const IntVec& v);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

// lcm of the coordinate denominators (1 for an integer vector).
Int denominator_lcm(const RatVec& v);

// Exact determinant of a square integer matrix (Bareiss, fraction-free).
Int determinant(const IntMat& m);

// Solves M x = b exactly; throws DegenerateGeometryError when M is singular.
RatVec solve_linear_system(const RatMat& m, const RatVec& b);

// Exact inverse; throws DegenerateGeometryError when singular.
RatMat invert(const RatMat& m);

// Row rank over the rationals.
int rank(RatMat m);

// One-dimensional nullspace of a matrix with rows.size() == cols - 1.
// Returns the spanning vector, or an empty vector when the rows are
// linearly dependent (nullspace dimension > 1).
RatVec nullspace_vector(const RatMat& rows, int cols);

RatVec matvec(const RatMat& m, const RatVec& x);

}  // namespace ehrhart
