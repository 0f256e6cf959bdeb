#include "ehrhart/combinatorics.hpp"

#include <mutex>
#include <numeric>

namespace ehrhart {

Int factorial(unsigned long n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Int multinomial(unsigned long k, const std::vector<unsigned long>& parts) {
  unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0ul);
  if (sum != k) throw InputError("multinomial parts do not sum to k");
  Int m = factorial(k);
  for (unsigned long p : parts) m /= factorial(p);
  return m;
}

Rational bernoulli_number(unsigned long n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k; this recurrence yields
  // B_1 = -1/2, the convention used throughout.
  while (cache.size() <= n) {
    unsigned long m = cache.size();
    Rational s;
    for (unsigned long k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * cache[k];
    cache.push_back(-s / Rational(static_cast<long>(m + 1)));
  }
  return cache[n];
}

Rational bernoulli_polynomial(unsigned long n, const Rational& x) {
  Rational s;
  for (unsigned long k = 0; k <= n; ++k)
    s += Rational(binomial(n, k)) * bernoulli_number(k) * x.pow(static_cast<long>(n - k));
  return s;
}

void for_each_composition(unsigned long k, unsigned long parts,
                          const std::function<void(const std::vector<unsigned long>&)>& fn) {
  if (parts == 0) {
    if (k == 0) fn({});
    return;
  }
  std::vector<unsigned long> m(parts, 0);
  auto rec = [&](auto&& self, unsigned long pos, unsigned long left) -> void {
    if (pos + 1 == parts) {
      m[pos] = left;
      fn(m);
      return;
    }
    for (unsigned long v = 0; v <= left; ++v) {
      m[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, k);
}

}  // namespace ehrhart
