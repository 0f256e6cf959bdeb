#include "ehrhart/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ehrhart {

bool HRepresentation::contains(const RatVec& x, bool open) const {
  for (const auto& ineq : inequalities) {
    Rational lhs = dot(x, ineq.normal);
    if (open ? !(lhs < ineq.offset) : ineq.offset < lhs) return false;
  }
  return true;
}

VertexCone::VertexCone(RatVec apex, IntMat edges)
    : apex_(std::move(apex)), edges_(std::move(edges)) {
  const int d = static_cast<int>(edges_.size());
  for (const IntVec& row : edges_) {
    Int g = 0;
    for (const Int& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1) throw InputError("edge vector is not primitive");
  }
  Int det = determinant(edges_);
  if (sgn(det) == 0) throw DegenerateGeometryError("vertex cone with singular edge matrix");
  volume_ = abs(det);
  // rows of M^T are the columns of M
  RatMat mt(d, RatVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) mt[i][j] = Rational(edges_[j][i]);
  inv_transpose_ = invert(mt);
}

RatVec VertexCone::reduce(const RatVec& x) const {
  RatVec lam = lambda(x);
  for (auto& l : lam) l = l.frac();
  const int d = dim();
  RatVec out(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) out[i] += lam[k] * Rational(edges_[k][i]);
  return out;
}

IntVec primitive_direction(const RatVec& u) {
  Int scale = denominator_lcm(u);
  IntVec v(u.size());
  Int g = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rational s = u[i] * Rational(scale);
    v[i] = s.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  }
  if (sgn(g) == 0) throw InputError("primitive direction of the zero vector");
  for (auto& x : v) x /= g;
  return v;
}

namespace {

// Enumerates subsets of size k, invoking fn with index lists.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct IneqKey {
  IntVec normal;
  Rational offset;
  bool operator<(const IneqKey& o) const {
    if (normal != o.normal) return lex_less(normal, o.normal);
    return offset < o.offset;
  }
};

}  // namespace

HRepresentation facets_from_vertices(const std::vector<RatVec>& vertices, int dim) {
  const int n = static_cast<int>(vertices.size());
  if (n < dim + 1) throw DegenerateGeometryError("need at least dim+1 vertices");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (vertices[i] == vertices[j]) throw InputError("duplicate input vertex");

  // full-dimensionality: the differences from vertex 0 must span R^d
  RatMat diffs;
  for (int i = 1; i < n; ++i) {
    RatVec row(dim);
    for (int c = 0; c < dim; ++c) row[c] = vertices[i][c] - vertices[0][c];
    diffs.push_back(std::move(row));
  }
  if (rank(diffs) != dim)
    throw DegenerateGeometryError("vertex set is not full-dimensional");

  std::set<IneqKey> found;
  for_each_subset(n, dim, [&](const std::vector<int>& idx) {
    RatMat rows;
    for (int i = 1; i < dim; ++i) {
      RatVec row(dim);
      for (int c = 0; c < dim; ++c) row[c] = vertices[idx[i]][c] - vertices[idx[0]][c];
      rows.push_back(std::move(row));
    }
    RatVec normal_rat =
        (dim == 1) ? RatVec{Rational(1)} : nullspace_vector(rows, dim);
    if (normal_rat.empty()) return;  // affinely dependent subset
    IntVec normal = primitive_direction(normal_rat);
    Rational offset = dot(vertices[idx[0]], normal);
    bool above = false, below = false;
    for (int i = 0; i < n; ++i) {
      Rational s = dot(vertices[i], normal);
      if (offset < s) above = true;
      if (s < offset) below = true;
    }
    if (above && below) return;  // spanned hyperplane is not supporting
    if (!above && !below) return;
    if (above) {  // flip to outward orientation
      for (auto& x : normal) x = -x;
      offset = -offset;
    }
    found.insert(IneqKey{std::move(normal), std::move(offset)});
  });

  HRepresentation h;
  for (const auto& key : found) h.inequalities.push_back({key.normal, key.offset});
  return h;
}

namespace {

std::vector<std::vector<int>> tight_facet_sets(const std::vector<RatVec>& vertices,
                                               const HRepresentation& facets, int dim) {
  std::vector<std::vector<int>> tight(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t f = 0; f < facets.inequalities.size(); ++f) {
      if (dot(vertices[v], facets.inequalities[f].normal) == facets.inequalities[f].offset)
        tight[v].push_back(static_cast<int>(f));
    }
    if (static_cast<int>(tight[v].size()) < dim)
      throw InputError("input point is not a vertex of its hull");
    if (static_cast<int>(tight[v].size()) > dim)
      throw NotSimpleError("vertex lies on more than dim facets");
  }
  return tight;
}

}  // namespace

std::vector<std::vector<int>> adjacency_from_facets(const std::vector<RatVec>& vertices,
                                                    const HRepresentation& facets, int dim) {
  auto tight = tight_facet_sets(vertices, facets, dim);
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> common;
      std::set_intersection(tight[u].begin(), tight[u].end(), tight[v].begin(),
                            tight[v].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) == dim - 1) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(adj[v].size()) != dim)
      throw NotSimpleError("vertex " + std::to_string(v) + " has " +
                           std::to_string(adj[v].size()) + " neighbors, expected " +
                           std::to_string(dim));
    std::sort(adj[v].begin(), adj[v].end());
  }
  return adj;
}

Polytope::Polytope(int dim, std::vector<RatVec> vertices,
                   std::optional<std::vector<std::pair<int, int>>> edges)
    : dim_(dim), vertices_(std::move(vertices)) {
  if (dim_ < 1) throw InputError("dimension must be positive");
  for (const auto& v : vertices_)
    if (static_cast<int>(v.size()) != dim_)
      throw InputError("vertex coordinate count does not match dimension");

  facets_ = facets_from_vertices(vertices_, dim_);

  if (edges) {
    const int n = vertex_count();
    adjacency_.assign(n, {});
    for (auto [i, j] : *edges) {
      if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw InputError("edge endpoint out of range");
      adjacency_[i].push_back(j);
      adjacency_[j].push_back(i);
    }
    auto derived = adjacency_from_facets(vertices_, facets_, dim_);
    for (auto& lst : adjacency_) {
      std::sort(lst.begin(), lst.end());
      lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    if (adjacency_ != derived)
      throw InputError("given edges disagree with the facet structure");
  } else {
    adjacency_ = adjacency_from_facets(vertices_, facets_, dim_);
  }

  for (int v = 0; v < vertex_count(); ++v) {
    IntMat rows;
    for (int u : adjacency_[v]) {
      RatVec diff(dim_);
      for (int c = 0; c < dim_; ++c) diff[c] = vertices_[u][c] - vertices_[v][c];
      rows.push_back(primitive_direction(diff));
    }
    cones_.emplace_back(vertices_[v], std::move(rows));
  }

  denominator_ = 1;
  for (const auto& v : vertices_)
    mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(),
            denominator_lcm(v).get_mpz_t());
}

std::vector<IntVec> enumerate_shifted_parallelepiped(const VertexCone& cone,
                                                     const RatVec& shift) {
  const int d = cone.dim();
  // bounding box over the 2^d corners shift + M^T eps, eps in {0,1}^d
  RatVec lo = shift, hi = shift;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    for (int i = 0; i < d; ++i) {
      Rational c = shift[i];
      for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) c += Rational(cone.edges()[k][i]);
      if (c < lo[i]) lo[i] = c;
      if (hi[i] < c) hi[i] = c;
    }
  }
  IntVec lo_i(d), hi_i(d);
  Int cells = 1;
  for (int i = 0; i < d; ++i) {
    lo_i[i] = lo[i].ceil();
    hi_i[i] = hi[i].floor();
    Int w = hi_i[i] - lo_i[i] + 1;
    if (sgn(w) < 0) w = 0;
    cells *= w;
  }
  if (cells > 10000000) throw ResourceError("parallelepiped bounding box too large");

  std::vector<IntVec> points;
  IntVec p = lo_i;
  if (cells > 0) {
    while (true) {
      RatVec x(d);
      for (int i = 0; i < d; ++i) x[i] = Rational(p[i]) - shift[i];
      RatVec lam = cone.lambda(x);
      bool inside = true;
      for (const Rational& l : lam) {
        if (l.sign() < 0 || !(l < Rational(1))) { inside = false; break; }
      }
      if (inside) points.push_back(p);
      int pos = d - 1;
      while (pos >= 0 && p[pos] == hi_i[pos]) {
        p[pos] = lo_i[pos];
        --pos;
      }
      if (pos < 0) break;
      ++p[pos];
    }
  }
  std::sort(points.begin(), points.end(),
            [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return points;
}

}  // namespace ehrhart
