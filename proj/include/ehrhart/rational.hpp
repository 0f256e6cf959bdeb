#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "ehrhart/errors.hpp"

namespace ehrhart {

using Int = mpz_class;

// Exact arbitrary-precision rational scalar. Invariants: always reduced
// (gcd(|num|, den) = 1) and den > 0; every operation is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);
  Rational(long num, long den) : Rational(Int(num), Int(den)) {}

  // Parses "p/q" or "n". Throws InputError on malformed text or q = 0.
  static Rational from_string(const std::string& s);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    return c <=> 0;
  }

  Int floor() const;
  Int ceil() const;
  // Fractional part x - floor(x), always in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  // Multiplicative inverse; throws InputError on zero.
  Rational inverse() const;
  // Exact integer power with the 0^0 = 1 convention; negative exponents
  // require a nonzero base.
  Rational pow(long e) const;

  // "p/q", or just "n" when the denominator is 1.
  std::string str() const;

  // Decimal approximation with the given number of fractional digits
  // (human-readable output only; never used in computation).
  std::string decimal(int digits) const;

 private:
  explicit Rational(const mpq_class& q) : q_(q) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Int>;
using RatMat = std::vector<RatVec>;
using IntMat = std::vector<IntVec>;

}  // namespace ehrhart
