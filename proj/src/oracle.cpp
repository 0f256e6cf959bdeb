#include "ehrhart/oracle.hpp"

namespace ehrhart {
namespace oracle {

namespace {

struct Box {
  IntVec lo, hi;
  bool empty = false;
};

Box dilated_bounding_box(const Polytope& p, const Rational& t) {
  const int d = p.dim();
  RatVec lo(d), hi(d);
  bool first = true;
  for (const RatVec& v : p.vertices()) {
    for (int i = 0; i < d; ++i) {
      Rational c = t * v[i];
      if (first || c < lo[i]) lo[i] = c;
      if (first || hi[i] < c) hi[i] = c;
    }
    first = false;
  }
  Box box;
  box.lo.resize(d);
  box.hi.resize(d);
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    box.lo[i] = lo[i].ceil();
    box.hi[i] = hi[i].floor();
    Int w = box.hi[i] - box.lo[i] + 1;
    if (sgn(w) <= 0) box.empty = true;
    else cells *= w;
  }
  if (!box.empty && cells > 10000000)
    throw ResourceError("dilated bounding box exceeds the 10^7 candidate budget");
  return box;
}

template <typename Fn>
void scan(const Polytope& p, const Rational& t, bool open, Fn&& fn) {
  if (!(Rational(0) < t)) throw InputError("dilation t must be positive");
  Box box = dilated_bounding_box(p, t);
  if (box.empty) return;
  const int d = p.dim();
  IntVec q = box.lo;
  while (true) {
    bool inside = true;
    for (const auto& ineq : p.facets().inequalities) {
      Rational lhs(dot(q, ineq.normal));
      Rational rhs = t * ineq.offset;
      if (open ? !(lhs < rhs) : rhs < lhs) { inside = false; break; }
    }
    if (inside) fn(q);
    int pos = d - 1;
    while (pos >= 0 && q[pos] == box.hi[pos]) { q[pos] = box.lo[pos]; --pos; }
    if (pos < 0) break;
    ++q[pos];
  }
}

}  // namespace

Int brute_count(const Polytope& p, const Rational& t, bool open) {
  Int n = 0;
  scan(p, t, open, [&](const IntVec&) { ++n; });
  return n;
}

Rational brute_moment(const Polytope& p, const Rational& t, const IntVec& z, unsigned long m) {
  Rational total;
  scan(p, t, false, [&](const IntVec& q) {
    total += Rational(dot(q, z)).pow(static_cast<long>(m));
  });
  return total;
}

std::vector<IntVec> enumerate_points(const Polytope& p, const Rational& t, bool open) {
  std::vector<IntVec> points;
  scan(p, t, open, [&](const IntVec& q) { points.push_back(q); });
  // box scan order is already lexicographic
  return points;
}

QuasiPolynomial interpolated_quasipolynomial(const Polytope& p) {
  if (!p.denominator().fits_ulong_p() || p.denominator() > 10000)
    throw ResourceError("vertex denominator too large for residue enumeration");
  const unsigned long period = p.denominator().get_ui();
  const int d = p.dim();
  std::vector<Polynomial> pieces;
  for (unsigned long rho = 0; rho < period; ++rho) {
    long base = static_cast<long>(rho == 0 ? period : rho);
    std::vector<std::pair<Rational, Rational>> samples;
    for (int k = 0; k <= d; ++k) {
      Rational t(base + static_cast<long>(period) * k);
      samples.emplace_back(t, Rational(brute_count(p, t)));
    }
    Polynomial piece = lagrange_interpolate(samples);
    for (int k = d + 1; k <= d + 2; ++k) {
      Rational t(base + static_cast<long>(period) * k);
      if (piece(t) != Rational(brute_count(p, t)))
        throw InternalConsistencyError(
            "held-out count disagrees with interpolation; period exceeds the "
            "vertex denominator");
    }
    pieces.push_back(std::move(piece));
  }
  return QuasiPolynomial(period, std::move(pieces));
}

}  // namespace oracle
}  // namespace ehrhart
