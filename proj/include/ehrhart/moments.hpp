#pragma once

#include "ehrhart/geometry.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

enum class Orientation { kClosed, kOpen };

// Parameters of one discrete-moment evaluation mu_n(Pi_v, t): the sum of
// <q, z>^n over the lattice flow Z^d - tv (mod Pi_v) for the closed
// orientation, or Z^d + tv (mod Pi_v) for the open one.
struct MomentRequest {
  const VertexCone& cone;
  Rational t;
  IntVec z;
  unsigned long n = 0;
  Orientation orientation = Orientation::kClosed;
};

// Exact discrete moment. Closed orientation sums <q - tv, z>^n over
// q in (Pi_v + tv) ∩ Z^d; open sums <q + tv, z>^n over (Pi_v - tv) ∩ Z^d.
// n = 0 always yields |det M_v| (0^0 = 1). Throws GenericityError when
// some <edge, z> = 0.
Rational discrete_moment(const MomentRequest& req);
Rational discrete_moment(const VertexCone& cone, const Rational& t, const IntVec& z,
                         unsigned long n, Orientation orientation = Orientation::kClosed);

// The |det M_v| torus positions of Z^d - tv (mod Pi_v), sorted
// lexicographically. Position j tracks the integer point that started at
// the j-th element of Pi_v ∩ Z^d when t = 0; see flow_positions_tracked.
std::vector<RatVec> lattice_flow_points(const VertexCone& cone, const Rational& t);

// Same positions, but ordered by starting integer point (stable trajectory
// identity across t; used for flow plotting output).
std::vector<RatVec> flow_positions_tracked(const VertexCone& cone, const Rational& t);

// One closed geodesic of the integer-time lattice flow: the set of integer
// points lying on it. All orbits of a cone have equal length and together
// partition Pi_v ∩ Z^d.
struct FlowOrbit {
  std::vector<RatVec> points;
  unsigned long length() const { return points.size(); }
};

// Orbits of the map x -> x - v (mod edge lattice), gathered per closed
// geodesic by iterating from each unvisited integer point until first
// return and recording the integer positions encountered.
std::vector<FlowOrbit> flow_orbits(const VertexCone& cone);

// The t-values in (t_lo, t_hi) where the active set of
// (Pi_v + tv) ∩ Z^d changes, i.e. where some candidate point's
// parallelepiped coordinate lambda_i(t) crosses 0 or 1. Sorted, unique.
RatVec moment_breakpoints(const VertexCone& cone, const Rational& t_lo, const Rational& t_hi);

// The active set (Pi_v + tv) ∩ Z^d at a fixed t.
std::vector<IntVec> active_lattice_points(const VertexCone& cone, const Rational& t);

// mu_n as a polynomial in t for a fixed active set:
// sum_p (<p, z> - t <v, z>)^n expanded symbolically.
Polynomial moment_polynomial(const VertexCone& cone, const std::vector<IntVec>& active,
                             const IntVec& z, unsigned long n);

// mu_n(Pi_v, t) on (t_lo, t_hi] as a piecewise polynomial in t. Pieces are
// delimited by moment_breakpoints; each piece's polynomial is taken from
// the active set at the piece midpoint and is exact on the piece interior.
PiecewisePolynomial piecewise_moment(const VertexCone& cone, const IntVec& z,
                                     unsigned long n, const Rational& t_lo,
                                     const Rational& t_hi);

}  // namespace ehrhart
