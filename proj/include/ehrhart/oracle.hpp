#pragma once

#include "ehrhart/geometry.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {
// Ground truth by exhaustive enumeration. Uses only the H-representation
// (never vertex cones or Barnes machinery), so agreement with the formula
// modules is evidence rather than tautology.
namespace oracle {

// |tP ∩ Z^d| (closed) or |tP° ∩ Z^d| (open) by bounding-box scan with the
// scaled facet test <n_i, p> <= t b_i. Refuses boxes over 10^7 candidates.
Int brute_count(const Polytope& p, const Rational& t, bool open = false);

// sum over tP ∩ Z^d of <p, z>^m, by direct enumeration.
Rational brute_moment(const Polytope& p, const Rational& t, const IntVec& z, unsigned long m);

// All lattice points of tP (closed or open), sorted lexicographically.
std::vector<IntVec> enumerate_points(const Polytope& p, const Rational& t, bool open = false);

// Quasi-polynomial fitted per residue class from d+1 brute counts at
// t = rho, rho + D, ...; two further counts per residue are held out and
// must match (InternalConsistencyError otherwise).
QuasiPolynomial interpolated_quasipolynomial(const Polytope& p);

}  // namespace oracle
}  // namespace ehrhart
