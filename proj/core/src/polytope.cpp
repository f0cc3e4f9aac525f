#include "latgerm/polytope.hpp"

#include <algorithm>

#include "feasibility.hpp"

namespace latgerm {

namespace {

// Angular class of a 2D direction: 0 on the half [0, pi) starting at
// (1,0) inclusive, 1 on the other half. Within a class, counterclockwise
// order is cross(a, b) > 0.
int angle_half(const IntVec& v) {
  if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
  return 1;
}

Int cross2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

Rat cross2(const RatVec& a, const RatVec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool ccw_normal_less(const Facet& fa, const Facet& fb) {
  const IntVec& a = fa.normal.coords();
  const IntVec& b = fb.normal.coords();
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  Int c = cross2(a, b);
  if (c != 0) return c > 0;
  return fa.offset < fb.offset;
}

std::optional<RatVec> strict_interior(std::size_t dim, const std::vector<Facet>& facets) {
  std::vector<detail::LinIneq> sys;
  sys.reserve(facets.size());
  for (const auto& f : facets) {
    detail::LinIneq c;
    c.coeffs = to_rat_vec(f.normal.coords());
    c.constant = f.offset;
    c.strict = true;
    sys.push_back(std::move(c));
  }
  return detail::solve_linear_system(std::move(sys), dim);
}

bool has_unbounded_direction(std::size_t dim, const std::vector<Facet>& facets) {
  // The recession cone {<x, v_i> >= 0} is nontrivial iff it contains a
  // point with some coordinate equal to +-1.
  for (std::size_t j = 0; j < dim; ++j) {
    for (int sign : {1, -1}) {
      std::vector<detail::LinIneq> sys;
      for (const auto& f : facets) {
        detail::LinIneq c;
        c.coeffs = to_rat_vec(f.normal.coords());
        c.constant = 0;
        sys.push_back(std::move(c));
      }
      detail::LinIneq pin;
      pin.coeffs.assign(dim, Rat(0));
      pin.coeffs[j] = sign;
      pin.constant = -1;  // sign * x_j >= 1
      sys.push_back(std::move(pin));
      if (detail::solve_linear_system(std::move(sys), dim)) return true;
    }
  }
  return false;
}

}  // namespace

RationalPolytope RationalPolytope::from_facets(std::size_t dim, std::vector<Facet> facets) {
  if (dim == 0) fail("DimensionMismatch", "polytope dimension must be positive");
  if (facets.empty()) fail("EmptyPolytope", "a polytope needs at least one facet");
  for (const auto& f : facets)
    if (f.normal.dim() != dim) fail("DimensionMismatch", "facet normal dimension mismatch");

  if (dim == 2) std::sort(facets.begin(), facets.end(), ccw_normal_less);
  for (std::size_t i = 0; i + 1 < facets.size(); ++i)
    if (facets[i] == facets[i + 1]) fail("DuplicateFacet", "two identical facets");
  if (dim != 2) {
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = i + 1; j < facets.size(); ++j)
        if (facets[i] == facets[j]) fail("DuplicateFacet", "two identical facets");
  }

  auto witness = strict_interior(dim, facets);
  if (!witness) fail("EmptyInterior", "facet system has no interior point");

  RationalPolytope p;
  p.dim_ = dim;
  p.facets_ = std::move(facets);
  p.interior_ = std::move(*witness);
  p.bounded_ = !has_unbounded_direction(dim, p.facets_);
  return p;
}

Rat RationalPolytope::eval(std::size_t facet, const RatVec& x) const {
  if (x.size() != dim_) fail("DimensionMismatch", "point dimension mismatch");
  const Facet& f = facets_[facet];
  Rat v = f.offset;
  for (std::size_t i = 0; i < dim_; ++i) v += x[i] * Rat(f.normal[i]);
  return v;
}

Rat dia_hyperplane(const RatVec& x, const Facet& f) {
  if (x.size() != f.normal.dim()) fail("DimensionMismatch", "point dimension mismatch");
  Rat v = f.offset;
  for (std::size_t i = 0; i < x.size(); ++i) v += x[i] * Rat(f.normal[i]);
  return v < 0 ? -v : v;
}

BoundaryDistance dia_boundary(const RatVec& x, const RationalPolytope& p) {
  BoundaryDistance out;
  bool first = true;
  std::vector<Rat> values(p.facets().size());
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    values[i] = p.eval(i, x);
    if (values[i] < 0) fail("OutsidePolytope", "point violates facet " + std::to_string(i));
    if (first || values[i] < out.value) {
      out.value = values[i];
      first = false;
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == out.value) out.argmin.push_back(i);
  return out;
}

Polygon2 vertices_2d(const RationalPolytope& p) {
  if (p.dim() != 2) fail("DimensionMismatch", "vertex enumeration is 2D only");
  if (!p.bounded()) fail("Unbounded", "cannot enumerate vertices of an unbounded polytope");
  std::size_t n = p.facets().size();
  if (n < 3) fail("Degenerate", "bounded 2D polytope needs at least three facets");

  Polygon2 poly;
  poly.vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Facet& f = p.facets()[i];
    const Facet& g = p.facets()[(i + 1) % n];
    // Solve <x, vf> = -af, <x, vg> = -ag.
    Rat a = Rat(f.normal[0]), b = Rat(f.normal[1]);
    Rat c = Rat(g.normal[0]), d = Rat(g.normal[1]);
    Rat dt = a * d - b * c;
    if (dt == 0) fail("Degenerate", "consecutive facets are parallel");
    Rat rf = -f.offset, rg = -g.offset;
    RatVec v{(rf * d - b * rg) / dt, (a * rg - rf * c) / dt};
    poly.vertices.push_back(std::move(v));
  }
  // Every computed corner must satisfy all facet inequalities, otherwise
  // the facet list contains redundant half-planes.
  for (const auto& v : poly.vertices)
    for (std::size_t i = 0; i < n; ++i)
      if (p.eval(i, v) < 0) fail("Degenerate", "redundant facet in H-representation");
  return poly;
}

RationalPolytope polytope_from_vertices_2d(const Polygon2& poly) {
  std::size_t n = poly.vertices.size();
  if (n < 3) fail("NotConvex", "a polygon needs at least three vertices");
  for (const auto& v : poly.vertices)
    if (v.size() != 2) fail("DimensionMismatch", "polygon vertices must be 2D");
  std::vector<Facet> facets;
  facets.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec& a = poly.vertices[i];
    const RatVec& b = poly.vertices[(i + 1) % n];
    const RatVec& c = poly.vertices[(i + 2) % n];
    RatVec ab{b[0] - a[0], b[1] - a[1]};
    RatVec bc{c[0] - b[0], c[1] - b[1]};
    if (cross2(ab, bc) <= 0) fail("NotConvex", "vertices are not strictly convex CCW");
    RatVec inward{-ab[1], ab[0]};
    auto [normal, scale] = primitivize(inward);
    Rat offset = -(Rat(normal[0]) * a[0] + Rat(normal[1]) * a[1]);
    facets.push_back(Facet{normal, offset});
  }
  return RationalPolytope::from_facets(2, std::move(facets));
}

std::vector<Chamber> chambers_2d(const RationalPolytope& p) {
  if (p.dim() != 2) fail("DimensionMismatch", "chambers are 2D only");
  const auto& fs = p.facets();
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i].offset != fs[0].offset) fail("NotMonotone", "facet offsets differ");
  RatVec origin{Rat(0), Rat(0)};
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (p.eval(i, origin) <= 0) fail("OriginNotInterior", "0 is not interior");

  Polygon2 poly = vertices_2d(p);
  std::size_t n = fs.size();
  std::vector<Chamber> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Facet i's edge runs from vertex i-1 to vertex i (vertex j is the
    // corner between facets j and j+1).
    const RatVec& v0 = poly.vertices[(i + n - 1) % n];
    const RatVec& v1 = poly.vertices[i];
    out.push_back(Chamber{i, {origin, v0, v1}});
  }
  return out;
}

bool point_in_triangle(const RatVec& x, const std::array<RatVec, 3>& tri) {
  for (int i = 0; i < 3; ++i) {
    const RatVec& a = tri[static_cast<std::size_t>(i)];
    const RatVec& b = tri[static_cast<std::size_t>((i + 1) % 3)];
    RatVec ab{b[0] - a[0], b[1] - a[1]};
    RatVec ax{x[0] - a[0], x[1] - a[1]};
    if (cross2(ab, ax) < 0) return false;
  }
  return true;
}

bool is_delzant_2d(const RationalPolytope& p) {
  if (p.dim() != 2) fail("DimensionMismatch", "Delzant check is 2D only");
  if (!p.bounded()) return false;
  const auto& fs = p.facets();
  std::size_t n = fs.size();
  for (std::size_t i = 0; i < n; ++i) {
    Int d = cross2(fs[i].normal.coords(), fs[(i + 1) % n].normal.coords());
    if (d != 1 && d != -1) return false;
  }
  return true;
}

RationalPolytope cone_over(const RationalPolytope& p) {
  if (p.dim() != 2) fail("DimensionMismatch", "cone construction expects a 2D base");
  if (!p.bounded()) fail("Unbounded", "cone base must be bounded");
  RatVec origin{Rat(0), Rat(0)};
  for (std::size_t i = 0; i < p.facets().size(); ++i)
    if (p.eval(i, origin) <= 0) fail("OriginNotInterior", "0 is not interior to the base");

  std::vector<Facet> facets;
  facets.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    RatVec lifted{Rat(f.normal[0]), Rat(f.normal[1]), f.offset};
    auto [normal, scale] = primitivize(lifted);
    facets.push_back(Facet{normal, Rat(0)});
  }
  return RationalPolytope::from_facets(3, std::move(facets));
}

}  // namespace latgerm
