#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/polynomial.hpp"
#include "ehrhart/rational.hpp"

namespace testutil {

using ehrhart::Int;
using ehrhart::IntVec;
using ehrhart::Polynomial;
using ehrhart::Rational;
using ehrhart::RatVec;

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t x = (state += 0x9e3779b97f4a7c15ull);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }
  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long max_num, long max_den) {
    return Rational(range(-max_num, max_num), range(1, max_den));
  }
  Rational nonzero_rational(long max_num, long max_den) {
    while (true) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }
  RatVec nonzero_vector(int d, long max_num, long max_den) {
    RatVec v(d);
    for (auto& x : v) x = nonzero_rational(max_num, max_den);
    return v;
  }
  IntVec int_vector(int d, long lo, long hi) {
    IntVec v(d);
    for (auto& x : v) x = range(lo, hi);
    return v;
  }
};

inline Polynomial poly(std::initializer_list<Rational> coeffs_constant_first) {
  return Polynomial(RatVec(coeffs_constant_first));
}

// Antiderivative with zero constant term (test-side only).
inline Polynomial antiderivative(const Polynomial& p) {
  RatVec out(p.coefficients().size() + 1);
  for (std::size_t i = 0; i < p.coefficients().size(); ++i)
    out[i + 1] = p.coefficients()[i] / Rational(static_cast<long>(i + 1));
  return Polynomial(out);
}

}  // namespace testutil
