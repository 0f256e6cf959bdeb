#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "ehrhart/geometry.hpp"
#include "helpers.hpp"

using namespace ehrhart;
using namespace testutil;

namespace {

// Random nonsingular cone with primitive rows and |det| <= 50; used by
// the parallelepiped invariants below.
VertexCone random_cone(Rng& rng, int d) {
  while (true) {
    IntMat rows(d, IntVec(d));
    bool zero_row = false;
    for (auto& row : rows) {
      Int g = 0;
      for (auto& x : row) {
        x = rng.range(-4, 4);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
      if (g == 0) { zero_row = true; break; }
      for (auto& x : row) x /= g;
    }
    if (zero_row) continue;
    Int det = determinant(rows);
    if (sgn(det) != 0 && cmp(abs(det), 50) <= 0) {
      RatVec apex = rng.nonzero_vector(d, 6, 4);
      return VertexCone(apex, rows);
    }
  }
}

}  // namespace

TEST_CASE("primitive directions") {
  CHECK(primitive_direction({Rational(4), Rational(1)}) == IntVec{4, 1});
  CHECK(primitive_direction({Rational(2), Rational(4)}) == IntVec{1, 2});
  CHECK(primitive_direction({rat("-1/2"), rat("3/2")}) == IntVec{-1, 3});
  CHECK(primitive_direction({rat("2/3")}) == IntVec{1});
  CHECK_THROWS_AS(primitive_direction({Rational(0), Rational(0)}), InputError);
}

TEST_CASE("primitive direction properties") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    int d = static_cast<int>(rng.range(1, 4));
    RatVec u = rng.nonzero_vector(d, 8, 6);
    IntVec w = primitive_direction(u);
    Int g = 0;
    for (const Int& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    CHECK(g == 1);
    // positive multiple of the input: coordinate ratios agree and are positive
    Rational scale;
    for (int i = 0; i < d; ++i) {
      if (u[i].is_zero()) {
        CHECK(w[i] == 0);
        continue;
      }
      Rational s = Rational(w[i]) / u[i];
      if (scale.is_zero()) scale = s;
      CHECK(s == scale);
    }
    CHECK(scale.sign() > 0);
  }
}

TEST_CASE("facets of the standard triangle") {
  auto h = facets_from_vertices({point({0, 0}), point({1, 0}), point({0, 1})}, 2);
  REQUIRE(h.inequalities.size() == 3);
  // outward primitive normals: -x <= 0, -y <= 0, x + y <= 1
  bool has_left = false, has_bottom = false, has_diag = false;
  for (const auto& ineq : h.inequalities) {
    if (ineq.normal == IntVec{-1, 0} && ineq.offset == Rational(0)) has_left = true;
    if (ineq.normal == IntVec{0, -1} && ineq.offset == Rational(0)) has_bottom = true;
    if (ineq.normal == IntVec{1, 1} && ineq.offset == Rational(1)) has_diag = true;
  }
  CHECK(has_left);
  CHECK(has_bottom);
  CHECK(has_diag);
}

TEST_CASE("facet counts for boxes and intervals") {
  CHECK(unit_square().facets().inequalities.size() == 4);
  CHECK(centered_cube(3).facets().inequalities.size() == 6);
  auto h = facets_from_vertices({{rat("1/2")}, {rat("3/2")}}, 1);
  REQUIRE(h.inequalities.size() == 2);
  for (const auto& ineq : h.inequalities) {
    if (ineq.normal == IntVec{1}) CHECK(ineq.offset == rat("3/2"));
    if (ineq.normal == IntVec{-1}) CHECK(ineq.offset == rat("-1/2"));
  }
}

TEST_CASE("degenerate and invalid vertex sets") {
  CHECK_THROWS_AS(facets_from_vertices({point({0, 0}), point({1, 1}), point({2, 2})}, 2),
                  DegenerateGeometryError);
  CHECK_THROWS_AS(facets_from_vertices({point({0, 0}), point({1, 0})}, 2),
                  DegenerateGeometryError);
  CHECK_THROWS_AS(facets_from_vertices({point({0, 0}), point({0, 0}), point({0, 1})}, 2),
                  InputError);
  // midpoint of an edge is not a vertex
  CHECK_THROWS_AS(Polytope(2, {point({0, 0}), point({2, 0}), point({1, 0}), point({0, 2})}),
                  InputError);
}

TEST_CASE("adjacency of simple polytopes") {
  Polytope tri = standard_triangle();
  for (int v = 0; v < 3; ++v) CHECK(tri.adjacency()[v].size() == 2);

  Polytope sq = unit_square();
  // squares have no diagonals: (0,0) at index 0 is adjacent to (1,0), (0,1)
  CHECK(sq.adjacency()[0] == std::vector<int>{1, 2});
  CHECK(sq.adjacency()[3] == std::vector<int>{1, 2});
}

TEST_CASE("octahedron is rejected as not simple") {
  std::vector<RatVec> octa;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      RatVec v(3, Rational(0));
      v[i] = Rational(s);
      octa.push_back(std::move(v));
    }
  CHECK_THROWS_AS(Polytope(3, std::move(octa)), NotSimpleError);
}

TEST_CASE("explicit edge lists are validated") {
  std::vector<std::pair<int, int>> good{{0, 1}, {0, 2}, {1, 2}};
  Polytope tri(2, {point({0, 0}), point({1, 0}), point({0, 1})}, good);
  CHECK(tri.adjacency()[0] == std::vector<int>{1, 2});

  std::vector<std::pair<int, int>> missing{{0, 1}, {0, 2}};
  CHECK_THROWS_AS(Polytope(2, {point({0, 0}), point({1, 0}), point({0, 1})}, missing),
                  InputError);
  std::vector<std::pair<int, int>> oob{{0, 5}, {0, 2}, {1, 2}};
  CHECK_THROWS_AS(Polytope(2, {point({0, 0}), point({1, 0}), point({0, 1})}, oob),
                  InputError);
}

TEST_CASE("vertex cones of the worked examples") {
  Polytope fig = rational_triangle();
  const VertexCone& cone = fig.cone(0);  // apex (-1/2, -1/4)
  CHECK(cone.edges() == IntMat{{4, 1}, {2, 3}});
  CHECK(cone.volume() == 10);

  Polytope tri = standard_triangle();
  const VertexCone& at_e1 = tri.cone(1);  // apex (1, 0)
  // neighbors in index order: (0,0) then (0,1)
  CHECK(at_e1.edges() == IntMat{{-1, 0}, {-1, 1}});
  CHECK(at_e1.volume() == 1);

  Polytope sq = unit_square();
  const VertexCone& origin = sq.cone(0);
  CHECK(origin.edges() == IntMat{{1, 0}, {0, 1}});
  CHECK(origin.volume() == 1);

  CHECK_THROWS_AS(VertexCone({Rational(0), Rational(0)}, {{2, 0}, {0, 1}}), InputError);
}

TEST_CASE("polytope denominators") {
  CHECK(standard_triangle().denominator() == 1);
  CHECK(standard_triangle().is_integer());
  CHECK(rational_triangle().denominator() == 4);
  CHECK(half_square().denominator() == 2);
  CHECK(interval(rat("1/6"), rat("5/6")).denominator() == 6);
  CHECK_FALSE(rational_triangle().is_integer());
}

TEST_CASE("parallelepiped enumeration basics") {
  VertexCone unit({Rational(0), Rational(0)}, {{1, 0}, {0, 1}});
  CHECK(enumerate_shifted_parallelepiped(unit, {Rational(0), Rational(0)}) ==
        std::vector<IntVec>{{0, 0}});

  VertexCone skew({Rational(0), Rational(0)}, {{1, 0}, {1, 2}});
  CHECK(enumerate_shifted_parallelepiped(skew, {Rational(0), Rational(0)}) ==
        std::vector<IntVec>{{0, 0}, {1, 1}});

  // the rational-triangle cone always holds exactly 10 points, any shift
  Polytope fig = rational_triangle();
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    RatVec shift = {rng.rational(5, 4), rng.rational(5, 4)};
    CHECK(enumerate_shifted_parallelepiped(fig.cone(0), shift).size() == 10);
  }
}

TEST_CASE("parallelepiped point count equals |det| for random cones and shifts") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int d = static_cast<int>(rng.range(1, 3));
    VertexCone cone = random_cone(rng, d);
    RatVec shift(d);
    for (auto& s : shift) s = rng.rational(6, 5);
    auto pts = enumerate_shifted_parallelepiped(cone, shift);
    CHECK(Int(pts.size()) == cone.volume());
    // all returned points satisfy the half-open lambda test and are sorted
    for (std::size_t i = 1; i < pts.size(); ++i) CHECK(lex_less(pts[i - 1], pts[i]));
    for (const auto& p : pts) {
      RatVec x(d);
      for (int c = 0; c < d; ++c) x[c] = Rational(p[c]) - shift[c];
      for (const Rational& l : cone.lambda(x)) {
        CHECK(l.sign() >= 0);
        CHECK(l < Rational(1));
      }
    }
  }
}

TEST_CASE("2-D parallelepiped point sum identity") {
  // sum of Pi ∩ Z^2 equals (det - 1) * (w1 + w2) / 2
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    VertexCone cone = random_cone(rng, 2);
    auto pts = enumerate_shifted_parallelepiped(cone, {Rational(0), Rational(0)});
    RatVec sum(2);
    for (const auto& p : pts)
      for (int c = 0; c < 2; ++c) sum[c] += Rational(p[c]);
    for (int c = 0; c < 2; ++c) {
      Rational expected = Rational(Int(cone.volume() - 1)) *
                          Rational(Int(cone.edges()[0][c] + cone.edges()[1][c])) / Rational(2);
      CHECK(sum[c] == expected);
    }
  }
}

TEST_CASE("membership modes of the H-representation") {
  Polytope tri = standard_triangle();
  CHECK(tri.facets().contains(point({0, 0})));
  CHECK_FALSE(tri.facets().contains(point({0, 0}), /*open=*/true));
  CHECK(tri.facets().contains(point({"1/4", "1/4"}), /*open=*/true));
  CHECK_FALSE(tri.facets().contains(point({2, 0})));
}

TEST_CASE("facet round-trip recovers the vertex set") {
  for (const Polytope& p : {standard_triangle(), unit_square(), rational_triangle(),
                            centered_cube(3), half_square()}) {
    // every vertex is tight on exactly d facets, and solving those
    // equalities recovers it exactly
    for (const auto& v : p.vertices()) {
      RatMat rows;
      RatVec rhs;
      for (const auto& ineq : p.facets().inequalities) {
        if (dot(v, ineq.normal) == ineq.offset) {
          rows.push_back(to_rational(ineq.normal));
          rhs.push_back(ineq.offset);
        }
      }
      REQUIRE(static_cast<int>(rows.size()) == p.dim());
      CHECK(solve_linear_system(rows, rhs) == v);
    }
    // and each facet is tight on >= d vertices
    for (const auto& ineq : p.facets().inequalities) {
      int tight = 0;
      for (const auto& v : p.vertices())
        if (dot(v, ineq.normal) == ineq.offset) ++tight;
      CHECK(tight >= p.dim());
    }
  }
}

TEST_CASE("one-dimensional polytopes work uniformly") {
  Polytope seg = interval(rat("1/2"), rat("3/2"));
  CHECK(seg.vertex_count() == 2);
  CHECK(seg.adjacency()[0] == std::vector<int>{1});
  CHECK(seg.cone(0).edges() == IntMat{{1}});
  CHECK(seg.cone(1).edges() == IntMat{{-1}});
  CHECK(seg.cone(0).volume() == 1);
}
