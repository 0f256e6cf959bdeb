#include "ehrhart/moments.hpp"

#include <algorithm>
#include <set>

#include "ehrhart/combinatorics.hpp"

namespace ehrhart {

namespace {

void require_generic(const VertexCone& cone, const IntVec& z) {
  for (const IntVec& w : cone.edges())
    if (sgn(dot(w, z)) == 0)
      throw GenericityError("direction z is orthogonal to an edge vector");
}

RatVec scaled_apex(const VertexCone& cone, const Rational& t) {
  RatVec s(cone.apex().size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = t * cone.apex()[i];
  return s;
}

bool is_integral(const RatVec& x) {
  for (const Rational& c : x)
    if (!c.is_integer()) return false;
  return true;
}

}  // namespace

Rational discrete_moment(const MomentRequest& req) {
  require_generic(req.cone, req.z);
  RatVec tv = scaled_apex(req.cone, req.t);
  RatVec shift = tv;
  if (req.orientation == Orientation::kOpen)
    for (auto& c : shift) c = -c;
  Rational tvz = dot(tv, req.z);
  if (req.orientation == Orientation::kOpen) tvz = -tvz;  // summand offset is -shift

  Rational total;
  for (const IntVec& p : enumerate_shifted_parallelepiped(req.cone, shift))
    total += (dot(to_rational(p), req.z) - tvz).pow(static_cast<long>(req.n));
  return total;
}

Rational discrete_moment(const VertexCone& cone, const Rational& t, const IntVec& z,
                         unsigned long n, Orientation orientation) {
  return discrete_moment(MomentRequest{cone, t, z, n, orientation});
}

std::vector<RatVec> lattice_flow_points(const VertexCone& cone, const Rational& t) {
  auto points = flow_positions_tracked(cone, t);
  std::sort(points.begin(), points.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  return points;
}

std::vector<RatVec> flow_positions_tracked(const VertexCone& cone, const Rational& t) {
  RatVec shift = scaled_apex(cone, t);
  std::vector<RatVec> points;
  for (const IntVec& p : enumerate_shifted_parallelepiped(cone, RatVec(cone.dim(), Rational(0)))) {
    RatVec x(cone.dim());
    for (int i = 0; i < cone.dim(); ++i) x[i] = Rational(p[i]) - shift[i];
    points.push_back(cone.reduce(x));
  }
  return points;
}

std::vector<FlowOrbit> flow_orbits(const VertexCone& cone) {
  const int d = cone.dim();
  auto starts = enumerate_shifted_parallelepiped(cone, RatVec(d, Rational(0)));
  std::set<std::vector<std::string>> visited;  // integer points, rendered
  auto key = [](const RatVec& x) {
    std::vector<std::string> k;
    k.reserve(x.size());
    for (const Rational& c : x) k.push_back(c.str());
    return k;
  };

  std::vector<FlowOrbit> orbits;
  for (const IntVec& s : starts) {
    RatVec start = to_rational(s);
    if (visited.count(key(start))) continue;
    FlowOrbit orbit;
    RatVec pos = start;
    do {
      if (is_integral(pos)) {
        orbit.points.push_back(pos);
        visited.insert(key(pos));
      }
      RatVec next(d);
      for (int i = 0; i < d; ++i) next[i] = pos[i] - cone.apex()[i];
      pos = cone.reduce(next);
    } while (pos != start);
    orbits.push_back(std::move(orbit));
  }

  // equal-length cosets of one cyclic subgroup; anything else is a bug
  for (const auto& o : orbits)
    if (o.length() != orbits.front().length())
      throw InternalConsistencyError("flow orbits of unequal length");
  return orbits;
}

namespace {

// Membership of candidate p in (Pi_v + tv) ∩ Z^d as a t-interval:
// lambda(t) = inv * p - t * beta with beta = inv * v, and every coordinate
// must satisfy 0 <= lambda_i(t) < 1. Returns false when empty for all t,
// otherwise fills [lo, hi] with the closure of the membership interval.
bool membership_window(const RatVec& alpha, const RatVec& beta, Rational& lo, Rational& hi,
                       bool& bounded_lo, bool& bounded_hi) {
  bounded_lo = bounded_hi = false;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (beta[i].is_zero()) {
      if (alpha[i].sign() < 0 || !(alpha[i] < Rational(1))) return false;
      continue;
    }
    // solve 0 <= alpha_i - t beta_i < 1
    Rational at0 = alpha[i] / beta[i];            // lambda_i = 0
    Rational at1 = (alpha[i] - Rational(1)) / beta[i];  // lambda_i = 1
    Rational lo_i = beta[i].sign() > 0 ? at1 : at0;
    Rational hi_i = beta[i].sign() > 0 ? at0 : at1;
    if (!bounded_lo || lo < lo_i) lo = lo_i;
    if (!bounded_hi || hi_i < hi) hi = hi_i;
    bounded_lo = bounded_hi = true;
    if (bounded_lo && bounded_hi && hi < lo) return false;
  }
  return true;
}

}  // namespace

RatVec moment_breakpoints(const VertexCone& cone, const Rational& t_lo, const Rational& t_hi) {
  if (!(Rational(0) < t_lo) || !(t_lo < t_hi))
    throw InputError("breakpoint scan needs 0 < t_lo < t_hi");
  const int d = cone.dim();

  // candidate integer points: box of the slab swept by Pi_v + tv over [t_lo, t_hi]
  RatVec lo_box, hi_box;
  for (const Rational& t : {t_lo, t_hi}) {
    RatVec shift = scaled_apex(cone, t);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      RatVec corner = shift;
      for (int k = 0; k < d; ++k)
        if (mask & (1u << k))
          for (int i = 0; i < d; ++i) corner[i] += Rational(cone.edges()[k][i]);
      if (lo_box.empty()) { lo_box = corner; hi_box = corner; continue; }
      for (int i = 0; i < d; ++i) {
        if (corner[i] < lo_box[i]) lo_box[i] = corner[i];
        if (hi_box[i] < corner[i]) hi_box[i] = corner[i];
      }
    }
  }
  IntVec lo_i(d), hi_i(d);
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    lo_i[i] = lo_box[i].ceil();
    hi_i[i] = hi_box[i].floor();
    Int w = hi_i[i] - lo_i[i] + 1;
    if (sgn(w) < 0) w = 0;
    cells *= w;
  }
  if (cells > 10000000) throw ResourceError("breakpoint slab too large");

  RatVec beta = cone.lambda(cone.apex());
  std::set<Rational> cuts;
  if (cells > 0) {
    IntVec p = lo_i;
    while (true) {
      RatVec alpha = cone.lambda(to_rational(p));
      Rational lo, hi;
      bool blo, bhi;
      if (membership_window(alpha, beta, lo, hi, blo, bhi)) {
        if (blo && t_lo < lo && lo < t_hi) cuts.insert(lo);
        if (bhi && t_lo < hi && hi < t_hi) cuts.insert(hi);
      }
      int pos = d - 1;
      while (pos >= 0 && p[pos] == hi_i[pos]) { p[pos] = lo_i[pos]; --pos; }
      if (pos < 0) break;
      ++p[pos];
    }
  }
  return RatVec(cuts.begin(), cuts.end());
}

std::vector<IntVec> active_lattice_points(const VertexCone& cone, const Rational& t) {
  return enumerate_shifted_parallelepiped(cone, scaled_apex(cone, t));
}

Polynomial moment_polynomial(const VertexCone& cone, const std::vector<IntVec>& active,
                             const IntVec& z, unsigned long n) {
  Rational apex_z;
  for (std::size_t i = 0; i < cone.apex().size(); ++i)
    apex_z += cone.apex()[i] * Rational(z[i]);

  // sum_p sum_j C(n,j) <p,z>^{n-j} (-<v,z>)^j t^j
  RatVec coeffs(n + 1);
  for (const IntVec& p : active) {
    Rational pz = Rational(dot(p, z));
    for (unsigned long j = 0; j <= n; ++j)
      coeffs[j] += Rational(binomial(n, j)) * pz.pow(static_cast<long>(n - j)) *
                   (-apex_z).pow(static_cast<long>(j));
  }
  return Polynomial(std::move(coeffs));
}

PiecewisePolynomial piecewise_moment(const VertexCone& cone, const IntVec& z,
                                     unsigned long n, const Rational& t_lo,
                                     const Rational& t_hi) {
  for (const IntVec& w : cone.edges())
    if (sgn(dot(w, z)) == 0)
      throw GenericityError("direction z is orthogonal to an edge vector");
  RatVec breaks = moment_breakpoints(cone, t_lo, t_hi);

  std::vector<Polynomial> pieces;
  Rational left = t_lo;
  for (std::size_t i = 0; i <= breaks.size(); ++i) {
    Rational right = (i < breaks.size()) ? breaks[i] : t_hi;
    Rational mid = (left + right) / Rational(2);
    auto active = active_lattice_points(cone, mid);
    if (Int(active.size()) != cone.volume())
      throw InternalConsistencyError("active set size differs from |det M_v|");
    pieces.push_back(moment_polynomial(cone, active, z, n));
    left = right;
  }
  // a crossing where the summed polynomial does not change is not a real
  // breakpoint of mu_n; merge such neighbors (always the case for n = 0)
  RatVec kept_breaks;
  std::vector<Polynomial> kept;
  kept.push_back(std::move(pieces.front()));
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (pieces[i + 1] == kept.back()) continue;
    kept_breaks.push_back(breaks[i]);
    kept.push_back(std::move(pieces[i + 1]));
  }
  return PiecewisePolynomial(t_lo, t_hi, std::move(kept_breaks), std::move(kept));
}

}  // namespace ehrhart
