#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "latgerm/atf.hpp"
#include "latgerm/germ.hpp"
#include "testsupport.hpp"

using namespace latgerm;

namespace {

IntVec iv(std::initializer_list<std::int64_t> xs) {
  IntVec v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

std::vector<IntVec> sorted_normals(const RationalPolytope& p) {
  std::vector<IntVec> out;
  for (const auto& f : p.facets()) out.push_back(f.normal.coords());
  std::sort(out.begin(), out.end());
  return out;
}

Int det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

TEST_CASE("shear formula") {
  PrimVec w01(iv({0, 1}));
  CHECK(shear(w01, RatVec{Rat(2), Rat(1)}) == RatVec{Rat(2), Rat(1)});
  CHECK(shear(w01, RatVec{Rat(-2), Rat(1)}) == RatVec{Rat(-2), Rat(-1)});
  PrimVec w11(iv({1, 1}));
  CHECK(shear(w11, RatVec{Rat(3), Rat(3)}) == RatVec{Rat(3), Rat(3)});
}

TEST_CASE("dual shear formula and adjoint identity") {
  CHECK(shear_dual(PrimVec(iv({0, 1})), iv({1, 0})) == iv({1, 0}));
  CHECK(shear_dual(PrimVec(iv({1, 1})), iv({-1, -1})) == iv({-3, 1}));

  Rng rng(41);
  int done = 0;
  while (done < 100) {
    IntVec wraw = testsupport::random_int_vec(2, -5, 5, rng);
    if (wraw[0] == 0 && wraw[1] == 0) continue;
    PrimVec w = primitivize(to_rat_vec(wraw)).first;
    IntVec v = testsupport::random_int_vec(2, -7, 7, rng);
    RatVec x{Rat(rng.range(-9, 9)), Rat(rng.range(-9, 9))};
    if (Rat(w[0]) * x[1] - Rat(w[1]) * x[0] < 0) continue;  // identity half
    RatVec sx = shear(w, x);
    Rat lhs = sx[0] * Rat(v[0]) + sx[1] * Rat(v[1]);
    IntVec dv = shear_dual(w, v);
    Rat rhs = x[0] * Rat(dv[0]) + x[1] * Rat(dv[1]);
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("shear pieces are volume preserving and dual is unimodular") {
  Rng rng(43);
  int done = 0;
  while (done < 50) {
    IntVec wraw = testsupport::random_int_vec(2, -5, 5, rng);
    if (wraw[0] == 0 && wraw[1] == 0) continue;
    PrimVec w = primitivize(to_rat_vec(wraw)).first;
    PiecewiseShear tau{w, +1};
    CHECK(det(tau.linear()) == 1);
    IntMatrix dual(2, 2);
    IntVec d0 = shear_dual(w, iv({1, 0}));
    IntVec d1 = shear_dual(w, iv({0, 1}));
    dual.at(0, 0) = d0[0];
    dual.at(1, 0) = d0[1];
    dual.at(0, 1) = d1[0];
    dual.at(1, 1) = d1[1];
    CHECK(is_unimodular(dual));
    ++done;
  }
}

TEST_CASE("one mutation of the standard triangle") {
  ATFDiagram start = standard_triangle_diagram();
  REQUIRE(start.nodes().size() == 3);
  // Node 0 sits toward the corner (-1/3,-1/3) with cut direction (1,1).
  CHECK(start.nodes()[0].cut.coords() == iv({1, 1}));

  MutationResult res = mutate_diagram(start, 0);
  CHECK(sorted_normals(res.diagram.polytope()) ==
        std::vector<IntVec>{iv({-1, -1}), iv({0, 1}), iv({1, -3})});
  for (const auto& f : res.diagram.polytope().facets()) CHECK(f.offset == make_rat(1, 3));

  // Facet count is preserved and the pairwise determinants read (1,1,2).
  const auto& fs = res.diagram.polytope().facets();
  REQUIRE(fs.size() == 3);
  std::vector<Int> dets;
  for (std::size_t i = 0; i < 3; ++i)
    dets.push_back(boost::multiprecision::abs(
        det2(fs[i].normal.coords(), fs[(i + 1) % 3].normal.coords())));
  std::sort(dets.begin(), dets.end());
  CHECK(dets == std::vector<Int>{1, 1, 4});

  // The mutated node's cut is reversed.
  CHECK(res.diagram.nodes()[0].cut.coords() == iv({-1, -1}));
}

TEST_CASE("double mutation returns a unimodular image of the original") {
  ATFDiagram start = standard_triangle_diagram();
  MutationResult first = mutate_diagram(start, 0);
  MutationResult second = mutate_diagram(first.diagram, 0);

  IntMatrix a = first.tau.linear();
  Polygon2 original = vertices_2d(start.polytope());
  std::vector<RatVec> mapped;
  for (const auto& v : original.vertices) mapped.push_back(matvec(a, v));
  auto expected = polytope_from_vertices_2d(Polygon2{mapped});
  CHECK(second.diagram.polytope() == expected);
}

TEST_CASE("mutation rejects a cut line through the opposite vertex") {
  // A square with a corner node: the cut line through the center exits
  // through the opposite corner.
  std::vector<Facet> fs;
  fs.push_back(Facet{PrimVec(iv({1, 0})), Rat(1)});
  fs.push_back(Facet{PrimVec(iv({-1, 0})), Rat(1)});
  fs.push_back(Facet{PrimVec(iv({0, 1})), Rat(1)});
  fs.push_back(Facet{PrimVec(iv({0, -1})), Rat(1)});
  auto square = RationalPolytope::from_facets(2, std::move(fs));
  std::vector<DiagramNode> nodes;
  nodes.push_back(DiagramNode{RatVec{make_rat(-1, 2), make_rat(-1, 2)}, PrimVec(iv({1, 1})), +1});
  ATFDiagram d(std::move(square), std::move(nodes));
  CHECK_THROWS_WITH_AS(mutate_diagram(d, 0), doctest::Contains("CutThroughVertex"), DomainError);
}

TEST_CASE("mutation rejects colliding nodes") {
  ATFDiagram start = standard_triangle_diagram();
  std::vector<DiagramNode> nodes = start.nodes();
  // Second node on the same cut line as node 0 is rejected at
  // construction already.
  CHECK_THROWS_WITH_AS(
      ATFDiagram(start.polytope(),
                 {nodes[0], DiagramNode{RatVec{make_rat(-1, 8), make_rat(-1, 8)},
                                        PrimVec(iv({1, 1})), +1}}),
      doctest::Contains("NodeCollision"), DomainError);
}

TEST_CASE("walks reach the worked triangles") {
  CHECK(delta_m({}).triple == std::array<Int, 3>{1, 1, 1});
  CHECK(sorted_normals(delta_m({}).diagram.polytope()) ==
        std::vector<IntVec>{iv({-1, -1}), iv({0, 1}), iv({1, 0})});

  MarkovTriangle t112 = delta_m({1});
  std::array<Int, 3> sorted112 = t112.triple;
  std::sort(sorted112.begin(), sorted112.end());
  CHECK(sorted112 == std::array<Int, 3>{1, 1, 2});
  CHECK(sorted_normals(t112.diagram.polytope()) ==
        std::vector<IntVec>{iv({-1, -1}), iv({0, 1}), iv({1, -3})});

  MarkovTriangle t125 = delta_m({1, 1});
  std::array<Int, 3> sorted125 = t125.triple;
  std::sort(sorted125.begin(), sorted125.end());
  CHECK(sorted125 == std::array<Int, 3>{1, 2, 5});
  const auto& fs = t125.diagram.polytope().facets();
  std::vector<Int> dets;
  for (std::size_t i = 0; i < 3; ++i)
    dets.push_back(boost::multiprecision::abs(
        det2(fs[i].normal.coords(), fs[(i + 1) % 3].normal.coords())));
  std::sort(dets.begin(), dets.end());
  CHECK(dets == std::vector<Int>{1, 4, 25});
}

TEST_CASE("triangle labels pair determinants with the triple") {
  MarkovTree tree = markov_tree(800);
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    MarkovTriangle tri = delta_m(tree.path_to(i));
    const auto& fs = tri.diagram.polytope().facets();
    REQUIRE(fs.size() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
      const Int& m = tri.triple[j];
      // Corner j joins facets j and j+1; its determinant is the square of
      // the attached Markov number and the normal difference is divisible
      // by it.
      const IntVec& u = fs[j].normal.coords();
      const IntVec& v = fs[(j + 1) % 3].normal.coords();
      CHECK(det2(u, v) == m * m);
      CHECK((u[0] - v[0]) % m == 0);
      CHECK((u[1] - v[1]) % m == 0);
      CHECK(fs[j].offset == make_rat(1, 3));
    }
  }
}

TEST_CASE("triangles are path independent up to a linear unimodular map") {
  // Enumerate all walks of length <= 4 and group the resulting normal
  // sets by the value multiset; within a group the canonical forms of the
  // lifted normal sets must agree.
  std::map<std::array<Int, 3>, GermInvariants> seen;
  std::vector<std::vector<int>> stack{{}};
  for (std::size_t depth = 0; depth <= 4; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& walk : stack) {
      MarkovTriangle tri = delta_m(walk);
      std::array<Int, 3> key = tri.triple;
      std::sort(key.begin(), key.end());
      std::vector<IntVec> normals;
      for (const auto& f : tri.diagram.polytope().facets())
        normals.push_back(f.normal.coords());
      Germ germ(Rat(1), normals);
      GermInvariants inv = germ_invariants(germ);
      auto it = seen.find(key);
      if (it == seen.end()) {
        seen.emplace(key, inv);
      } else {
        CHECK(inv.canonical_matrix == it->second.canonical_matrix);
      }
      if (walk.size() < 4)
        for (int slot = 1; slot <= 3; ++slot) {
          auto extended = walk;
          extended.push_back(slot);
          next.push_back(std::move(extended));
        }
    }
    stack = std::move(next);
  }
}

TEST_CASE("the sheared half is part of the node data") {
  ATFDiagram start = standard_triangle_diagram();
  std::vector<DiagramNode> nodes = start.nodes();
  nodes[0].sheared_sign = -1;
  ATFDiagram flipped(start.polytope(), nodes);
  MutationResult res = mutate_diagram(flipped, 0);
  for (const auto& f : res.diagram.polytope().facets()) CHECK(f.offset == make_rat(1, 3));

  // Shearing the other half produces the mirror triangle; the normal sets
  // agree up to GL(2,Z).
  MutationResult plus = mutate_diagram(start, 0);
  std::vector<IntVec> plus_normals, minus_normals;
  for (const auto& f : plus.diagram.polytope().facets())
    plus_normals.push_back(f.normal.coords());
  for (const auto& f : res.diagram.polytope().facets())
    minus_normals.push_back(f.normal.coords());
  CHECK(plus_normals != minus_normals);
  Germ ga(Rat(1), plus_normals), gb(Rat(1), minus_normals);
  CHECK(std::holds_alternative<Equivalent>(germ_equivalent(ga, gb)));
}

TEST_CASE("boundary distance is preserved along a mutation") {
  ATFDiagram start = standard_triangle_diagram();
  MutationResult res = mutate_diagram(start, 0);
  InvarianceReport rep = check_dia_invariance(start, res.diagram, res.tau, 1000, 0);
  CHECK(rep.samples == 1000);
  CHECK(rep.failures.empty());

  // The center keeps distance 1/3 on both sides.
  CHECK(dia_boundary(RatVec{Rat(0), Rat(0)}, start.polytope()).value == make_rat(1, 3));
  CHECK(dia_boundary(res.tau.apply(RatVec{Rat(0), Rat(0)}), res.diagram.polytope()).value ==
        make_rat(1, 3));

  // A boundary point maps to a boundary point.
  RatVec edge{make_rat(1, 6), make_rat(1, 6)};
  CHECK(dia_boundary(edge, start.polytope()).value == 0);
  CHECK(dia_boundary(res.tau.apply(edge), res.diagram.polytope()).value == 0);
}
