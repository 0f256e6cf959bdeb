#include "ehrhart/rational.hpp"

#include <ostream>

namespace ehrhart {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw InputError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal: " + s);
  }
}

Int Rational::floor() const {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

Int Rational::ceil() const {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return q;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  return Rational(den(), num());
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);  // includes 0^0 = 1
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
  if (neg) {
    if (is_zero()) throw InputError("negative power of zero");
    return Rational(d, n);
  }
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  Int twice = 2 * num() * scale;
  Int rounded = (twice + (sign() < 0 ? -den() : den())) / (2 * den());
  bool neg = sgn(rounded) < 0;
  Int mag = neg ? Int(-rounded) : rounded;
  std::string t = mag.get_str();
  if (static_cast<int>(t.size()) <= digits) t.insert(0, digits + 1 - t.size(), '0');
  std::string out = neg ? "-" : "";
  out += t.substr(0, t.size() - digits);
  if (digits > 0) out += "." + t.substr(t.size() - digits);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ehrhart
