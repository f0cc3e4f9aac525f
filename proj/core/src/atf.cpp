#include "latgerm/atf.hpp"

#include <algorithm>

namespace latgerm {

namespace {

Rat det_wx(const PrimVec& w, const RatVec& x) { return Rat(w[0]) * x[1] - Rat(w[1]) * x[0]; }

Int det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

RatVec rat2(const Rat& a, const Rat& b) { return RatVec{a, b}; }

}  // namespace

ATFDiagram::ATFDiagram(RationalPolytope polytope, std::vector<DiagramNode> nodes)
    : polytope_(std::move(polytope)), nodes_(std::move(nodes)) {
  if (polytope_.dim() != 2) fail("DimensionMismatch", "base diagrams are 2D");
  RatVec origin = rat2(0, 0);
  for (std::size_t i = 0; i < polytope_.facets().size(); ++i)
    if (polytope_.eval(i, origin) <= 0)
      fail("OriginNotInterior", "diagram center must be interior");
  for (const auto& node : nodes_) {
    if (node.position.size() != 2) fail("DimensionMismatch", "node position must be 2D");
    if (node.sheared_sign != 1 && node.sheared_sign != -1)
      fail("BadShearSign", "sheared half must be + or -");
    for (std::size_t i = 0; i < polytope_.facets().size(); ++i)
      if (polytope_.eval(i, node.position) <= 0)
        fail("NodeNotInterior", "node position must be interior");
    if (det_wx(node.cut, node.position) != 0)
      fail("CutNotThroughCenter", "cut line misses the diagram center");
  }
  // Cut segments lie on distinct rays from the center, so segments are
  // disjoint iff no two nodes share a line through the center.
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (det2(nodes_[i].cut.coords(), nodes_[j].cut.coords()) == 0)
        fail("NodeCollision", "two branch cuts on one line");
}

RatVec shear(const PrimVec& w, const RatVec& x) {
  if (w.dim() != 2 || x.size() != 2) fail("DimensionMismatch", "shear is 2D");
  Rat d = det_wx(w, x);
  if (d < 0) return x;
  return rat2(x[0] - d * Rat(w[0]), x[1] - d * Rat(w[1]));
}

IntVec shear_dual(const PrimVec& w, const IntVec& v) {
  if (w.dim() != 2 || v.size() != 2) fail("DimensionMismatch", "shear is 2D");
  Int f = w[0] * v[0] + w[1] * v[1];
  return IntVec{v[0] + f * w[1], v[1] - f * w[0]};
}

bool PiecewiseShear::in_sheared_half(const RatVec& x) const {
  Rat d = det_wx(w, x);
  return sheared_sign > 0 ? d >= 0 : d <= 0;
}

RatVec PiecewiseShear::apply(const RatVec& x) const {
  if (!in_sheared_half(x)) return x;
  Rat d = Rat(sheared_sign) * det_wx(w, x);
  return rat2(x[0] - d * Rat(w[0]), x[1] - d * Rat(w[1]));
}

IntMatrix PiecewiseShear::linear() const {
  // x - sign * (w1*x2 - w2*x1) * w; the two signs are the two
  // normalizations of the same mutation and differ by a global
  // unimodular map.
  Int s(sheared_sign);
  IntMatrix a = IntMatrix::identity(2);
  a.at(0, 0) = 1 + s * w[0] * w[1];
  a.at(0, 1) = -s * w[0] * w[0];
  a.at(1, 0) = s * w[1] * w[1];
  a.at(1, 1) = 1 - s * w[0] * w[1];
  return a;
}

namespace {

// Boundary crossing of the ray {t * dir : t > 0}: the first facet line hit.
struct RayHit {
  RatVec point;
  Rat t;
};

RayHit boundary_hit(const RationalPolytope& p, const RatVec& dir) {
  bool found = false;
  Rat best_t = 0;
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const Facet& f = p.facets()[i];
    Rat slope = Rat(f.normal[0]) * dir[0] + Rat(f.normal[1]) * dir[1];
    if (slope >= 0) continue;  // the ray never leaves through this facet
    Rat t = -f.offset / slope;
    if (!found || t < best_t) {
      best_t = t;
      found = true;
    }
  }
  if (!found) fail("Unbounded", "ray does not meet the boundary");
  return RayHit{rat2(dir[0] * best_t, dir[1] * best_t), best_t};
}

bool points_equal(const RatVec& a, const RatVec& b) { return a[0] == b[0] && a[1] == b[1]; }

}  // namespace

MutationResult mutate_diagram(const ATFDiagram& d, std::size_t node_index) {
  if (node_index >= d.nodes().size()) fail("BadNode", "node index out of range");
  const DiagramNode& node = d.nodes()[node_index];
  const PrimVec& w = node.cut;

  PiecewiseShear tau{w, node.sheared_sign};
  IntMatrix a = tau.linear();

  Polygon2 poly = vertices_2d(d.polytope());
  std::size_t n = poly.vertices.size();

  // The branch cut ends on the ray -cut from the center; the fold appears
  // on the opposite ray.
  RatVec minus_w = rat2(-Rat(w[0]), -Rat(w[1]));
  RatVec plus_w = rat2(Rat(w[0]), Rat(w[1]));
  RayHit cut_end = boundary_hit(d.polytope(), minus_w);
  RayHit fold = boundary_hit(d.polytope(), plus_w);

  bool cut_end_is_vertex = false;
  bool fold_is_vertex = false;
  for (const auto& v : poly.vertices) {
    if (points_equal(v, cut_end.point)) cut_end_is_vertex = true;
    if (points_equal(v, fold.point)) fold_is_vertex = true;
  }
  if (!cut_end_is_vertex) fail("CutNotAtVertex", "branch cut must end at a vertex");
  if (fold_is_vertex) fail("CutThroughVertex", "cut line exits through a vertex");

  for (std::size_t j = 0; j < d.nodes().size(); ++j) {
    if (j == node_index) continue;
    if (det_wx(w, d.nodes()[j].position) == 0)
      fail("NodeCollision", "another node lies on the cut line");
  }

  // Insert the fold point into the vertex cycle, then map everything.
  std::vector<RatVec> cycle;
  cycle.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec& v0 = poly.vertices[i];
    const RatVec& v1 = poly.vertices[(i + 1) % n];
    cycle.push_back(v0);
    Rat f0 = det_wx(w, v0), f1 = det_wx(w, v1);
    if ((f0 > 0 && f1 < 0) || (f0 < 0 && f1 > 0)) {
      // The open edge crosses the cut line; exactly one of the two
      // crossings is in an edge interior, and it is the fold point.
      cycle.push_back(fold.point);
    }
  }

  std::vector<RatVec> image;
  image.reserve(cycle.size());
  for (const auto& v : cycle) image.push_back(tau.apply(v));

  // Drop points that became collinear with their neighbours (the absorbed
  // cut-end vertex).
  std::vector<RatVec> hull;
  for (std::size_t i = 0; i < image.size(); ++i) {
    const RatVec& prev = image[(i + image.size() - 1) % image.size()];
    const RatVec& cur = image[i];
    const RatVec& next = image[(i + 1) % image.size()];
    Rat cr = (cur[0] - prev[0]) * (next[1] - prev[1]) - (cur[1] - prev[1]) * (next[0] - prev[0]);
    if (cr == 0) continue;
    hull.push_back(cur);
  }
  RationalPolytope mutated = polytope_from_vertices_2d(Polygon2{hull});

  std::vector<DiagramNode> new_nodes = d.nodes();
  for (std::size_t j = 0; j < new_nodes.size(); ++j) {
    if (j == node_index) continue;
    Rat side = det_wx(w, new_nodes[j].position);
    bool sheared = tau.sheared_sign > 0 ? side > 0 : side < 0;
    if (!sheared) continue;
    new_nodes[j].position = tau.apply(new_nodes[j].position);
    new_nodes[j].cut = PrimVec(matvec(a, new_nodes[j].cut.coords()));
  }
  // The mutated node keeps its line but the branch cut switches sides; it
  // slides to the midpoint between the center and the new fold vertex.
  new_nodes[node_index].position = rat2(fold.point[0] / 2, fold.point[1] / 2);
  new_nodes[node_index].cut = PrimVec(IntVec{-w[0], -w[1]});

  return MutationResult{ATFDiagram(std::move(mutated), std::move(new_nodes)), tau};
}

ATFDiagram standard_triangle_diagram() {
  std::vector<Facet> facets;
  facets.push_back(Facet{PrimVec(IntVec{1, 0}), make_rat(1, 3)});
  facets.push_back(Facet{PrimVec(IntVec{0, 1}), make_rat(1, 3)});
  facets.push_back(Facet{PrimVec(IntVec{-1, -1}), make_rat(1, 3)});
  RationalPolytope triangle = RationalPolytope::from_facets(2, std::move(facets));

  Polygon2 poly = vertices_2d(triangle);
  std::vector<DiagramNode> nodes;
  for (const auto& v : poly.vertices) {
    RatVec pos = rat2(v[0] / 2, v[1] / 2);
    auto [cut, scale] = primitivize(rat2(-v[0], -v[1]));
    nodes.push_back(DiagramNode{pos, cut, +1});
  }
  return ATFDiagram(std::move(triangle), std::move(nodes));
}

RatVec branch_cut_endpoint(const RationalPolytope& p, const DiagramNode& node) {
  RatVec minus = rat2(-Rat(node.cut[0]), -Rat(node.cut[1]));
  return boundary_hit(p, minus).point;
}

MarkovWalk::MarkovWalk() : diagram_(standard_triangle_diagram()), values_{1, 1, 1} {}

PiecewiseShear MarkovWalk::step(int slot) {
  if (slot < 1 || slot > 3) fail("BadSlot", "path slots must be 1, 2 or 3");
  // Rank nodes by (value, node index); the slot picks by that order, so
  // walks compose exactly like markov_tree on ascending triples.
  std::array<std::size_t, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return values_[x] != values_[y] ? values_[x] < values_[y] : x < y;
  });
  std::size_t target = order[static_cast<std::size_t>(slot - 1)];
  MutationResult res = mutate_diagram(diagram_, target);
  diagram_ = std::move(res.diagram);
  Int others = 1;
  for (std::size_t j = 0; j < 3; ++j)
    if (j != target) others *= values_[j];
  values_[target] = 3 * others - values_[target];
  return res.tau;
}

MarkovTriangle MarkovWalk::triangle() const {
  // Attach each node's Markov number to its corner; corner i of the
  // canonical facet order sits between facets i and i+1.
  Polygon2 poly = vertices_2d(diagram_.polytope());
  if (poly.vertices.size() != 3) fail("Degenerate", "Markov diagram is not a triangle");
  std::array<Int, 3> triple;
  std::array<bool, 3> assigned{false, false, false};
  for (std::size_t j = 0; j < 3; ++j) {
    RatVec corner = branch_cut_endpoint(diagram_.polytope(), diagram_.nodes()[j]);
    for (std::size_t i = 0; i < 3; ++i) {
      if (points_equal(corner, poly.vertices[i])) {
        triple[i] = values_[j];
        assigned[i] = true;
      }
    }
  }
  if (!(assigned[0] && assigned[1] && assigned[2]))
    fail("Degenerate", "nodes do not match the triangle corners");
  return MarkovTriangle{diagram_, std::move(triple)};
}

MarkovTriangle delta_m(const std::vector<int>& path) {
  MarkovWalk walk;
  for (int slot : path) walk.step(slot);
  return walk.triangle();
}

RatVec sample_point_2d(const RationalPolytope& p, Rng& rng) {
  Polygon2 poly = vertices_2d(p);
  Rat lo0 = poly.vertices[0][0], hi0 = lo0, lo1 = poly.vertices[0][1], hi1 = lo1;
  for (const auto& v : poly.vertices) {
    lo0 = std::min(lo0, v[0]);
    hi0 = std::max(hi0, v[0]);
    lo1 = std::min(lo1, v[1]);
    hi1 = std::max(hi1, v[1]);
  }
  const std::int64_t grid = 1 << 20;
  for (;;) {
    Rat u0 = make_rat(rng.range(0, grid), grid);
    Rat u1 = make_rat(rng.range(0, grid), grid);
    RatVec x = rat2(lo0 + (hi0 - lo0) * u0, lo1 + (hi1 - lo1) * u1);
    bool inside = true;
    for (std::size_t i = 0; i < p.facets().size() && inside; ++i)
      if (p.eval(i, x) < 0) inside = false;
    if (inside) return x;
  }
}

InvarianceReport check_dia_invariance(const ATFDiagram& d, const ATFDiagram& image,
                                      const PiecewiseShear& tau, std::size_t samples,
                                      std::uint64_t seed) {
  InvarianceReport report;
  report.samples = samples;
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    RatVec x = sample_point_2d(d.polytope(), rng);
    Rat lhs = dia_boundary(x, d.polytope()).value;
    RatVec y = tau.apply(x);
    Rat rhs = dia_boundary(y, image.polytope()).value;
    if (lhs != rhs) report.failures.push_back(InvarianceFailure{x, lhs, rhs});
  }
  return report;
}

}  // namespace latgerm
