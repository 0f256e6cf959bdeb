#pragma once

#include <optional>
#include <vector>

#include "ehrhart/linalg.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

// Closed half-space description <normal, x> <= offset with a primitive
// integer outward normal.
struct HRepresentation {
  struct Inequality {
    IntVec normal;
    Rational offset;
  };
  std::vector<Inequality> inequalities;

  // Closed membership uses <=, open membership uses < on every inequality.
  bool contains(const RatVec& x, bool open = false) const;
};

// Tangent-cone data at one vertex: the apex, the primitive integer edge
// vectors (one row per incident edge, pointing into the polytope), the
// index |det M| of the edge lattice, and (M^T)^{-1} for membership tests
// in the fundamental parallelepiped Pi = { M^T lambda : lambda in [0,1)^d }.
class VertexCone {
 public:
  VertexCone(RatVec apex, IntMat edges);

  int dim() const { return static_cast<int>(edges_.size()); }
  const RatVec& apex() const { return apex_; }
  const IntMat& edges() const { return edges_; }
  const Int& volume() const { return volume_; }
  const RatMat& inverse_transpose() const { return inv_transpose_; }

  // Coordinates lambda with M^T lambda = x.
  RatVec lambda(const RatVec& x) const { return matvec(inv_transpose_, x); }
  // The representative of x modulo the edge lattice lying in Pi.
  RatVec reduce(const RatVec& x) const;

 private:
  RatVec apex_;
  IntMat edges_;
  Int volume_;
  RatMat inv_transpose_;
};

class Polytope {
 public:
  // Builds a full-dimensional simple rational polytope from its vertex set.
  // Facets are derived by exhaustive hyperplane enumeration; adjacency is
  // derived from shared tight facets unless `edges` is given (then it is
  // validated). Throws DegenerateGeometryError / NotSimpleError / InputError.
  Polytope(int dim, std::vector<RatVec> vertices,
           std::optional<std::vector<std::pair<int, int>>> edges = std::nullopt);

  int dim() const { return dim_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const RatVec& vertex(int i) const { return vertices_.at(i); }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  const HRepresentation& facets() const { return facets_; }
  const VertexCone& cone(int i) const { return cones_.at(i); }
  const std::vector<VertexCone>& cones() const { return cones_; }

  // lcm of all vertex-coordinate denominators; 1 iff integer polytope.
  const Int& denominator() const { return denominator_; }
  bool is_integer() const { return denominator_ == 1; }

 private:
  int dim_;
  std::vector<RatVec> vertices_;
  std::vector<std::vector<int>> adjacency_;
  HRepresentation facets_;
  std::vector<VertexCone> cones_;
  Int denominator_;
};

// The unique positive integer multiple of u with coordinate gcd 1.
IntVec primitive_direction(const RatVec& u);

// Exact H-representation of conv(vertices); every input point must be a
// vertex of the hull.
HRepresentation facets_from_vertices(const std::vector<RatVec>& vertices, int dim);

// u ~ v iff they share exactly dim-1 tight facets. Validates simplicity.
std::vector<std::vector<int>> adjacency_from_facets(const std::vector<RatVec>& vertices,
                                                    const HRepresentation& facets, int dim);

// All integer points p = shift + M^T lambda with lambda in [0,1)^d,
// sorted lexicographically.
std::vector<IntVec> enumerate_shifted_parallelepiped(const VertexCone& cone,
                                                     const RatVec& shift);

}  // namespace ehrhart
