#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "latgerm/lattice.hpp"
#include "latgerm/numeric.hpp"

namespace latgerm {

// One half-space <x, normal> + offset >= 0 with an inward primitive normal.
struct Facet {
  PrimVec normal;
  Rat offset;

  friend bool operator==(const Facet& a, const Facet& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

// H-representation of a rational convex polytope with nonempty interior.
// Construction certifies the interior with an exact rational witness point
// and computes boundedness; in dimension two the facets are stored in
// counterclockwise order of their normals (starting from direction (1,0)).
class RationalPolytope {
 public:
  static RationalPolytope from_facets(std::size_t dim, std::vector<Facet> facets);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  bool bounded() const noexcept { return bounded_; }
  const RatVec& interior_point() const noexcept { return interior_; }

  // ell_i(x) = <x, v_i> + lambda_i
  Rat eval(std::size_t facet, const RatVec& x) const;

  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
    return a.dim_ == b.dim_ && a.facets_ == b.facets_;
  }

 private:
  RationalPolytope() = default;

  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
  RatVec interior_;
  bool bounded_ = false;
};

// Strictly convex counterclockwise vertex cycle.
struct Polygon2 {
  std::vector<RatVec> vertices;
};

// |<x, normal> + offset|: lattice-normalized distance to the hyperplane.
Rat dia_hyperplane(const RatVec& x, const Facet& f);

struct BoundaryDistance {
  Rat value;
  std::vector<std::size_t> argmin;  // facets achieving the minimum
};

// min_i ell_i(x) together with the argmin set; requires x inside the
// polytope (throws OutsidePolytope).
BoundaryDistance dia_boundary(const RatVec& x, const RationalPolytope& p);

// Vertices of a bounded 2D polytope, counterclockwise; vertex j is the
// intersection of facet lines j and j+1 (cyclically).
Polygon2 vertices_2d(const RationalPolytope& p);

// Inverse of vertices_2d up to the canonical facet rotation.
RationalPolytope polytope_from_vertices_2d(const Polygon2& poly);

struct Chamber {
  std::size_t facet;
  std::array<RatVec, 3> triangle;  // counterclockwise, first vertex is 0
};

// Partition of a monotone 2D polytope (all offsets equal, 0 interior) into
// the closest-facet triangles (0, V_i, V_{i+1}).
std::vector<Chamber> chambers_2d(const RationalPolytope& p);

bool point_in_triangle(const RatVec& x, const std::array<RatVec, 3>& tri);

// Adjacent facet normals all have determinant +-1.
bool is_delzant_2d(const RationalPolytope& p);

// {(h*x, h) : h > 0, x in p} as an unbounded H-representation: facet
// normals primitivize (v_i, lambda_i), offsets zero. Requires 0 interior.
RationalPolytope cone_over(const RationalPolytope& p);

}  // namespace latgerm
