#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehrhart/barnes.hpp"
#include "ehrhart/combinatorics.hpp"
#include "helpers.hpp"
#include "series_oracle.hpp"

using namespace ehrhart;
using testutil::barnes_polynomials_by_series;
using testutil::poly;
using testutil::Rng;

namespace {

Rational prod(const RatVec& a) {
  Rational p(1);
  for (const auto& x : a) p *= x;
  return p;
}

// Closed forms in power-sum notation, for the low indices used everywhere:
//   prod(a) B_0 = 1
//   prod(a) B_1 = -s1/2
//   prod(a) B_2 = (3 s1^2 - s2)/12
//   prod(a) B_3 = (s1 s2 - s1^3)/8
//   prod(a) B_4 = s1^4/16 - s1^2 s2/8 + s2^2/48 + s4/120
// (The B_4 constant is fixed against the generating function; see the
// series cross-check below, which pins every one of these.)
Rational closed_form_number(unsigned long k, const RatVec& a) {
  RatVec s = power_sums(a, 4);
  Rational s1 = s[0], s2 = s[1], s4 = s[3];
  Rational value;
  switch (k) {
    case 0: value = Rational(1); break;
    case 1: value = -s1 / Rational(2); break;
    case 2: value = (Rational(3) * s1.pow(2) - s2) / Rational(12); break;
    case 3: value = (s1 * s2 - s1.pow(3)) / Rational(8); break;
    case 4:
      value = s1.pow(4) / Rational(16) - s1.pow(2) * s2 / Rational(8) +
              s2.pow(2) / Rational(48) + s4 / Rational(120);
      break;
    default: REQUIRE(false);
  }
  return value / prod(a);
}

}  // namespace

TEST_CASE("barnes numbers at the pinned values") {
  CHECK(barnes_number(0, {Rational(2), Rational(3)}) == Rational(1, 6));
  CHECK(barnes_number(1, {Rational(1), Rational(1)}) == Rational(-1));
  CHECK(barnes_number(2, {Rational(1), Rational(1)}) == Rational(5, 6));
  CHECK(barnes_number(0, {Rational(1), Rational(2), Rational(4)}) == Rational(1, 8));
  CHECK_THROWS_AS(barnes_number(1, {Rational(1), Rational(0)}), GenericityError);
  CHECK_THROWS_AS(barnes_number(0, {}), InputError);
}

TEST_CASE("barnes polynomials at the pinned values") {
  CHECK(barnes_polynomial(1, {Rational(1)}) == poly({Rational(-1, 2), Rational(1)}));
  CHECK(barnes_polynomial(2, {Rational(1), Rational(1)}) ==
        poly({Rational(5, 6), Rational(-2), Rational(1)}));
  CHECK(barnes_polynomial(0, {Rational(1), Rational(2), Rational(4)}) ==
        poly({Rational(1, 8)}));
  // constant term is always the Barnes number
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    RatVec a = rng.nonzero_vector(2, 5, 3);
    for (unsigned long k = 0; k <= 4; ++k)
      CHECK(barnes_polynomial(k, a).coefficient(0) == barnes_number(k, a));
  }
}

TEST_CASE("power sums") {
  CHECK(power_sums({Rational(1), Rational(1)}, 2) == RatVec{Rational(2), Rational(2)});
  CHECK(power_sums({Rational(1), Rational(2), Rational(3)}, 1) == RatVec{Rational(6)});
  CHECK(power_sums({Rational(2), Rational(3)}, 4) ==
        RatVec{Rational(5), Rational(13), Rational(35), Rational(97)});
}

TEST_CASE("closed forms agree for k <= 4, d <= 3, random rational a") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 6, 4);
    for (unsigned long k = 0; k <= 4; ++k)
      CHECK(barnes_number(k, a) == closed_form_number(k, a));
  }
}

TEST_CASE("generating-function series reproduces numbers and polynomials") {
  Rng rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    auto by_series = barnes_polynomials_by_series(a, 6);
    for (unsigned long k = 0; k <= 6; ++k) {
      CHECK(barnes_polynomial(k, a) == by_series[k]);
      CHECK(barnes_number(k, a) == by_series[k].coefficient(0));
    }
  }
}

TEST_CASE("bernoulli-polynomial expansion fixture") {
  // (1/k!) B_k(t, a) = sum over compositions of prod_i a_i^{m_i-1}/m_i!
  //   * prod_i B_{m_i}(t / s1), valid when s1 = sum a_i != 0
  Rng rng(43);
  int checked = 0;
  while (checked < 10) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    Rational s1 = power_sums(a, 1)[0];
    if (s1.is_zero()) continue;
    ++checked;
    Rational t0 = rng.rational(7, 3);
    for (unsigned long k = 0; k <= 4; ++k) {
      Rational sum;
      for_each_composition(k, d, [&](const std::vector<unsigned long>& m) {
        Rational term(1);
        for (int i = 0; i < d; ++i)
          term *= a[i].pow(static_cast<long>(m[i]) - 1) /
                  Rational(factorial(m[i])) * bernoulli_polynomial(m[i], t0 / s1);
        sum += term;
      });
      CHECK(barnes_polynomial(k, a)(t0) == Rational(factorial(k)) * sum);
    }
  }
}

TEST_CASE("classical reduction at d = 1, a = (1)") {
  for (unsigned long k = 0; k <= 6; ++k) {
    Polynomial b = barnes_polynomial(k, {Rational(1)});
    // matches the classical Bernoulli polynomial coefficient-for-coefficient
    for (unsigned long j = 0; j <= k; ++j)
      CHECK(b.coefficient(k - j) == Rational(binomial(k, j)) * bernoulli_number(j));
    CHECK(barnes_number(k, {Rational(1)}) == bernoulli_number(k));
  }
}

TEST_CASE("reciprocity") {
  // (-1)^k B_k(-t, a) = B_k(t + s1, a) as exact polynomials
  Rng rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    Rational s1 = power_sums(a, 1)[0];
    for (unsigned long k = 0; k <= 5; ++k) {
      Polynomial b = barnes_polynomial(k, a);
      Polynomial lhs = b.scale_argument(Rational(-1));
      if (k % 2) lhs = Rational(-1) * lhs;
      CHECK(lhs == b.shift(s1));
    }
  }
}

TEST_CASE("homogeneity") {
  // B_k(lambda t, lambda a) = lambda^{k-d} B_k(t, a)
  Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    Rational lambda = rng.nonzero_rational(5, 3);
    RatVec la(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) la[i] = lambda * a[i];
    for (unsigned long k = 0; k <= 5; ++k) {
      Polynomial lhs = barnes_polynomial(k, la).scale_argument(lambda);
      Polynomial rhs =
          lambda.pow(static_cast<long>(k) - d) * barnes_polynomial(k, a);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("differentiation") {
  // d/dt B_k(t, a) = k B_{k-1}(t, a)
  Rng rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    for (unsigned long k = 1; k <= 5; ++k)
      CHECK(barnes_polynomial(k, a).derivative() ==
            Rational(static_cast<long>(k)) * barnes_polynomial(k - 1, a));
  }
}

TEST_CASE("parity about t = s1/2") {
  // recentering kills the powers of the opposite parity
  Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    Rational s1 = power_sums(a, 1)[0];
    for (unsigned long k = 0; k <= 5; ++k) {
      Polynomial centered = barnes_polynomial(k, a).shift(s1 / Rational(2));
      for (int j = 0; j <= centered.degree(); ++j)
        if ((static_cast<unsigned long>(j) % 2) != (k % 2))
          CHECK(centered.coefficient(j) == Rational(0));
    }
  }
}

TEST_CASE("prod(a) B_k(a) is homogeneous of degree k") {
  Rng rng(67);
  for (int trial = 0; trial < 15; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    RatVec a = rng.nonzero_vector(d, 5, 3);
    Rational lambda = rng.nonzero_rational(5, 3);
    RatVec la(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) la[i] = lambda * a[i];
    for (unsigned long k = 0; k <= 4; ++k)
      CHECK(prod(la) * barnes_number(k, la) ==
            lambda.pow(static_cast<long>(k)) * prod(a) * barnes_number(k, a));
  }
}
