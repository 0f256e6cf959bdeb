#include "ehrhart/barnes.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "ehrhart/combinatorics.hpp"
#include "ehrhart/linalg.hpp"

namespace ehrhart {

namespace {

void require_nonzero(const RatVec& a) {
  if (a.empty()) throw InputError("empty linear-form vector");
  for (const Rational& x : a)
    if (x.is_zero()) throw GenericityError("linear form vanishes on an edge vector");
}

using Key = std::pair<unsigned long, RatVec>;

struct KeyLess {
  bool operator()(const Key& x, const Key& y) const {
    if (x.first != y.first) return x.first < y.first;
    return lex_less(x.second, y.second);
  }
};

Rational barnes_number_uncached(unsigned long k, const RatVec& a) {
  const unsigned long d = a.size();
  Rational total;
  for_each_composition(k, d, [&](const std::vector<unsigned long>& m) {
    Rational term(multinomial(k, m));
    for (unsigned long i = 0; i < d; ++i) {
      Rational b = bernoulli_number(m[i]);
      if (b.is_zero()) { term = Rational(0); break; }  // odd m_i >= 3
      term *= b * a[i].pow(static_cast<long>(m[i]) - 1);
    }
    total += term;
  });
  return total;
}

}  // namespace

Rational barnes_number(unsigned long k, const RatVec& a) {
  require_nonzero(a);
  static std::map<Key, Rational, KeyLess> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, a});
    if (it != cache.end()) return it->second;
  }
  Rational value = barnes_number_uncached(k, a);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(Key{k, a}, std::move(value)).first->second;
}

Polynomial barnes_polynomial(unsigned long k, const RatVec& a) {
  require_nonzero(a);
  RatVec coeffs(k + 1);
  for (unsigned long j = 0; j <= k; ++j)
    coeffs[k - j] = Rational(binomial(k, j)) * barnes_number(j, a);
  return Polynomial(std::move(coeffs));
}

RatVec power_sums(const RatVec& a, unsigned long r_max) {
  RatVec out;
  out.reserve(r_max);
  RatVec pw = a;
  for (unsigned long r = 1; r <= r_max; ++r) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (r > 1) pw[i] *= a[i];
      s += pw[i];
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace ehrhart
