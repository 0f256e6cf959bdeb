#include "ehrhart/linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace ehrhart {

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const IntVec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rational(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (const Int& x : v) r.emplace_back(x);
  return r;
}

bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

Int denominator_lcm(const RatVec& v) {
  Int l = 1;
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  return l;
}

Int determinant(const IntMat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace {

// Gauss-Jordan on [m | rhs]; returns false when m is singular.
bool eliminate(RatMat& m, RatMat& rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return false;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rational inv = m[col][col].inverse();
    for (auto& x : m[col]) x *= inv;
    for (auto& x : rhs[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= f * m[col][c];
      for (std::size_t c = 0; c < rhs[r].size(); ++c) rhs[r][c] -= f * rhs[col][c];
    }
  }
  return true;
}

}  // namespace

RatVec solve_linear_system(const RatMat& m, const RatVec& b) {
  RatMat a = m;
  RatMat rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = {b[i]};
  if (!eliminate(a, rhs)) throw DegenerateGeometryError("singular linear system");
  RatVec x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) x[i] = rhs[i][0];
  return x;
}

RatMat invert(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat a = m;
  RatMat rhs(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) rhs[i][i] = Rational(1);
  if (!eliminate(a, rhs)) throw DegenerateGeometryError("singular matrix");
  return rhs;
}

int rank(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int r = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(r) < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = m[r][col].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t c = 0; c < cols; ++c) m[i][c] -= f * m[r][c];
    }
    ++r;
  }
  return r;
}

RatVec nullspace_vector(const RatMat& rows, int cols) {
  // Reduce, then back-substitute with the single free column set to 1.
  RatMat m = rows;
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < static_cast<int>(m.size()); ++col) {
    int piv = r;
    while (piv < static_cast<int>(m.size()) && m[piv][col].is_zero()) ++piv;
    if (piv == static_cast<int>(m.size())) continue;
    std::swap(m[r], m[piv]);
    Rational inv = m[r][col].inverse();
    for (auto& x : m[r]) x *= inv;
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (int c = 0; c < cols; ++c) m[i][c] -= f * m[r][c];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (r != cols - 1) return {};  // nullspace dimension != 1
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  RatVec v(cols);
  v[free_col] = Rational(1);
  for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m[i][free_col];
  return v;
}

RatVec matvec(const RatMat& m, const RatVec& x) {
  RatVec y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
  return y;
}

}  // namespace ehrhart
