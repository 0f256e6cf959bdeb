#pragma once

#include "ehrhart/polynomial.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

// Barnes number B_k(a) for a vector a of nonzero rationals:
//   B_k(a) = sum over compositions m_1+...+m_d = k of
//            multinomial(k; m) * prod_i a_i^{m_i - 1} * prod_i B_{m_i},
// with the classical Bernoulli numbers B_j (B_1 = -1/2). Entries with
// m_i = 0 contribute a_i^{-1}, hence the genericity requirement a_i != 0.
// Memoized; throws GenericityError on a zero entry.
Rational barnes_number(unsigned long k, const RatVec& a);

// Barnes polynomial B_k(t, a) = sum_j C(k,j) B_j(a) t^{k-j}, a degree-k
// polynomial in t whose constant term is barnes_number(k, a).
Polynomial barnes_polynomial(unsigned long k, const RatVec& a);

// Power sums [s_1, ..., s_rmax] with s_r = sum_i a_i^r.
RatVec power_sums(const RatVec& a, unsigned long r_max);

}  // namespace ehrhart
