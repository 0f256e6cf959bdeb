#pragma once

#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

// Univariate polynomial in t with exact rational coefficients, stored
// constant-first with no trailing zero coefficients (zero polynomial is
// the empty list, degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& c) { return Polynomial(RatVec{c}); }
  // c * t^k
  static Polynomial monomial(const Rational& c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVec& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }

  Rational operator()(const Rational& t) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Exact formal derivative.
  Polynomial derivative() const;
  // p(t + c), via binomial expansion.
  Polynomial shift(const Rational& c) const;
  // p(s * t); coefficient k picks up s^k.
  Polynomial scale_argument(const Rational& s) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  RatVec c_;
};

// Unique polynomial of degree < samples.size() through the given
// (t, value) pairs; throws InputError on duplicate t or no samples.
Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

// Quasi-polynomial on positive integers: one polynomial piece per residue
// of t mod period. Period 1 degenerates to a single polynomial.
class QuasiPolynomial {
 public:
  QuasiPolynomial(unsigned long period, std::vector<Polynomial> pieces);

  unsigned long period() const { return period_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Polynomial& piece(unsigned long residue) const { return pieces_.at(residue); }

  // Evaluation at an integer t > 0 via the piece for t mod period.
  Rational operator()(const Int& t) const;

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
    return a.period_ == b.period_ && a.pieces_ == b.pieces_;
  }

 private:
  unsigned long period_;
  std::vector<Polynomial> pieces_;
};

// Polynomials on a chain of open-closed intervals
// (lo, b_1], (b_1, b_2], ..., (b_k, hi].
class PiecewisePolynomial {
 public:
  PiecewisePolynomial(Rational lo, Rational hi, RatVec breakpoints,
                      std::vector<Polynomial> pieces);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const RatVec& breakpoints() const { return breaks_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }

  // Endpoints of piece i as the half-open interval (first, second].
  std::pair<Rational, Rational> piece_interval(std::size_t i) const;

  // Evaluation for lo < t <= hi; throws InputError outside the domain.
  Rational operator()(const Rational& t) const;

 private:
  Rational lo_, hi_;
  RatVec breaks_;
  std::vector<Polynomial> pieces_;
};

}  // namespace ehrhart
