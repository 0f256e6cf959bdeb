#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehrhart/geometry.hpp"
#include "ehrhart/moments.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

// Integer direction generic for a polytope: <z, w> != 0 for every edge
// vector w, so no linear-form denominator vanishes.
struct GenericDirection {
  IntVec z;
  std::uint64_t seed = 0;
};

// Structured pass/fail record for one exactly-checkable identity.
struct IdentityReport {
  std::string name;
  std::string params;
  std::string computed;
  std::string expected;
  bool pass = false;
};

IdentityReport make_report(std::string name, std::string params, const Rational& computed,
                           const Rational& expected);

struct EvalOptions {
  int threads = 1;
};

// Draws integer vectors from [-R, R]^d (R = 10 * d * #vertices) with a
// seeded deterministic generator until generic for the polytope.
GenericDirection pick_generic_z(const Polytope& p, std::uint64_t seed);

// Throws GenericityError unless <z, w> != 0 for every edge vector of p.
void require_generic(const Polytope& p, const IntVec& z);

// Linear-form vector a_v = M_v z of the cone at vertex i.
RatVec linear_forms(const VertexCone& cone, const IntVec& z);

// |tP ∩ Z^d| via the vertex formula
//   ((-1)^d / d!) sum_v sum_k C(d,k) B_k(t<v,z>, a_v) mu_{d-k}(Pi_v, t).
// Exact for every rational t > 0 and generic z; the result always has
// denominator 1.
Rational count_via_barnes(const Polytope& p, const Rational& t, const IntVec& z,
                          const EvalOptions& opts = {});

// One count with its per-vertex breakdown (diagnostic): contribution i is
// the scaled inner sum of vertex i, and the contributions add up to count.
struct EhrhartResult {
  Rational t;
  IntVec z;
  Rational count;
  RatVec vertex_contributions;
};

EhrhartResult count_with_contributions(const Polytope& p, const Rational& t,
                                       const IntVec& z, const EvalOptions& opts = {});

// Coefficient c_r(t) of t^r in the counting quasi-polynomial,
//   ((-1)^d / d!) sum_v <v,z>^r sum_j [d!/(r! j! (d-r-j)!)] B_j(a_v)
//     mu_{d-r-j}(Pi_v, t).
Rational coefficient_c_r(const Polytope& p, unsigned long r, const Rational& t,
                         const IntVec& z, const EvalOptions& opts = {});

// Counting quasi-polynomial on integer t > 0: period = vertex denominator
// lcm, one coefficient list per residue (residue 0 is sampled at t = D).
QuasiPolynomial integer_quasipolynomial(const Polytope& p, const IntVec& z,
                                        const EvalOptions& opts = {});

// Single-piece specialization for integer polytopes (denominator 1).
Polynomial ehrhart_polynomial_integer(const Polytope& p, const IntVec& z,
                                      const EvalOptions& opts = {});

// m'th discrete moment of the dilate: sum_{p in tP ∩ Z^d} <p, z>^m via
//   (-1)^d m! sum_v sum_{k=0}^{d+m} B_k(t<v,z>, a_v) mu_{d+m-k}(Pi_v, t)
//     / (k! (d+m-k)!).
Rational polytope_moment(const Polytope& p, unsigned long m, const Rational& t,
                         const IntVec& z, const EvalOptions& opts = {});

// Coefficient d_r(t) of t^r in the moment quasi-polynomial, r = 0..d+m;
// validated by reconstruction sum_r d_r(t) t^r = polytope_moment.
Rational moment_coefficient_d_r(const Polytope& p, unsigned long m, unsigned long r,
                                const Rational& t, const IntVec& z,
                                const EvalOptions& opts = {});

// Checks d/dt d_r(t) = -(r+1) d_{r+1}(t) symbolically on every
// breakpoint-free piece of (t_lo, t_hi], for r = 0..d+m (d_{d+m+1} := 0).
// m = 0 covers the counting coefficients c_r. Splits at breakpoints.
IdentityReport ode_check(const Polytope& p, unsigned long m, const IntVec& z,
                         const Rational& t_lo, const Rational& t_hi);

// The d_r(t) coefficients as exact polynomials in t on one breakpoint-free
// piece containing t_mid, r = 0..d+m.
std::vector<Polynomial> moment_coefficient_polynomials(const Polytope& p, unsigned long m,
                                                       const IntVec& z, const Rational& t_mid);

// Vanishing identities: for 0 <= m <= d-1,
//   0 = sum_{k<=m} C(m,k) sum_v B_k(t<v,z>, a_v) mu_{m-k}(Pi_v, t),
// and the Barnes-number coefficient form for every (m, r), 0 <= r <= m.
std::vector<IdentityReport> vanishing_identities(const Polytope& p, const Rational& t,
                                                 const IntVec& z);

// Constant-term identity for integer polytopes:
//   1 = ((-1)^d / d!) sum_k C(d,k) sum_v B_k(a_v) sum_{p in Pi_v} <p,z>^{d-k}.
IdentityReport constant_term_identity(const Polytope& p, const IntVec& z);

// |t P° ∩ Z^d| via the reflected flow:
//   (1/d!) sum_v sum_k C(d,k) B_k(-t<v,z>, a_v) mu^open_{d-k}(Pi_v, t).
Rational open_count(const Polytope& p, const Rational& t, const IntVec& z,
                    const EvalOptions& opts = {});

struct HollowResult {
  bool hollow = false;
  std::vector<IdentityReport> reports;
};

// Hollowness (no interior lattice points) of an integer polytope via the
// vanishing of the open-count expression at t = 1 for several generic z;
// cross-checked against open_count. Disagreement between the identity and
// the direct count throws InternalConsistencyError.
HollowResult is_hollow(const Polytope& p, const std::vector<IntVec>& zs);
HollowResult is_hollow(const Polytope& p, std::uint64_t seed, int num_z_samples);

// True iff |det M_v| = 1 at every vertex.
bool is_smooth(const Polytope& p);

// Smooth specializations; throw InputError on non-smooth input.
//   count:  ((-1)^d / d!) sum_v B_d(t<v,z>, a_v)          (integer t)
//   moment: (-1)^d m!/(d+m)! sum_v B_{d+m}(t<v,z>, a_v)   (integer t)
Rational count_smooth(const Polytope& p, const Rational& t, const IntVec& z);
Rational smooth_moment(const Polytope& p, unsigned long m, const Rational& t, const IntVec& z);

// Smooth identity suite: the vanishing sums sum_v B_m(t<v,z>, a_v) = 0
// (as polynomials in t), the coefficient form sum_v <v,z>^r B_{m-r}(a_v) = 0,
// the constant-term identity ((-1)^d/d!) sum_v B_d(a_v) = 1, and the
// 12-identity (d = 2) / 24-identity (d = 3) edge-ratio forms.
std::vector<IdentityReport> smooth_identities(const Polytope& p, const IntVec& z);

// vol P = ((-1)^d / d!) sum_v vol(Pi_v) <v,z>^d / prod_k <w_k(v), z>.
Rational volume_via_brion(const Polytope& p, const IntVec& z);

// Hypercube identity for [-1,1]^d:
//   ((-1)^d / d!) sum_{alpha in {-1,1}^d} (sum_i alpha_i z_i)^j
//     B_{d-j}(-alpha ∘ z) = 2^j.
IdentityReport hypercube_barnes_identity(int dim, unsigned long j, const IntVec& z);

// Counts and every c_r(t) must agree across independently seeded generic
// directions.
IdentityReport z_independence_check(const Polytope& p, const Rational& t,
                                    const std::vector<std::uint64_t>& seeds);

}  // namespace ehrhart
