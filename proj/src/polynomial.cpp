#include "ehrhart/polynomial.hpp"

#include <algorithm>

#include "ehrhart/combinatorics.hpp"

namespace ehrhart {

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  RatVec v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  RatVec out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  Polynomial r = p;
  for (auto& x : r.c_) x *= s;
  r.trim();
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  RatVec out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shift(const Rational& c) const {
  // sum_k c_k (t + c)^k
  Polynomial out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    RatVec term(k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      term[j] = c_[k] * Rational(binomial(k, j)) * c.pow(static_cast<long>(k - j));
    out += Polynomial(std::move(term));
  }
  return out;
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
  Polynomial r = *this;
  Rational f(1);
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    r.c_[i] *= f;
    f *= s;
  }
  r.trim();
  return r;
}

Polynomial lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
  if (samples.empty()) throw InputError("interpolation needs at least one sample");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw InputError("duplicate interpolation node " + samples[i].first.str());

  Polynomial result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Polynomial basis = Polynomial::constant(Rational(1));
    Rational denom(1);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(RatVec{-samples[j].first, Rational(1)});
      denom *= samples[i].first - samples[j].first;
    }
    result += (samples[i].second / denom) * basis;
  }
  return result;
}

QuasiPolynomial::QuasiPolynomial(unsigned long period, std::vector<Polynomial> pieces)
    : period_(period), pieces_(std::move(pieces)) {
  if (period_ == 0 || pieces_.size() != period_)
    throw InputError("quasi-polynomial needs one piece per residue");
}

Rational QuasiPolynomial::operator()(const Int& t) const {
  if (sgn(t) <= 0) throw InputError("quasi-polynomial evaluation needs t > 0");
  Int r = t % static_cast<unsigned long>(period_);
  return pieces_[r.get_ui()](Rational(t));
}

PiecewisePolynomial::PiecewisePolynomial(Rational lo, Rational hi, RatVec breakpoints,
                                         std::vector<Polynomial> pieces)
    : lo_(std::move(lo)), hi_(std::move(hi)), breaks_(std::move(breakpoints)),
      pieces_(std::move(pieces)) {
  if (!(lo_ < hi_)) throw InputError("empty piecewise domain");
  if (pieces_.size() != breaks_.size() + 1)
    throw InputError("piecewise polynomial needs breakpoints + 1 pieces");
  Rational prev = lo_;
  for (const Rational& b : breaks_) {
    if (!(prev < b)) throw InputError("breakpoints must be strictly increasing");
    prev = b;
  }
  if (!(prev < hi_)) throw InputError("breakpoints must lie inside the domain");
}

std::pair<Rational, Rational> PiecewisePolynomial::piece_interval(std::size_t i) const {
  Rational a = (i == 0) ? lo_ : breaks_[i - 1];
  Rational b = (i == breaks_.size()) ? hi_ : breaks_[i];
  return {a, b};
}

Rational PiecewisePolynomial::operator()(const Rational& t) const {
  if (!(lo_ < t) || hi_ < t) throw InputError("evaluation outside piecewise domain");
  std::size_t i = std::lower_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin();
  return pieces_[i](t);
}

}  // namespace ehrhart
