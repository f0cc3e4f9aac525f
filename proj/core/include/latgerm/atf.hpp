#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "latgerm/markov.hpp"
#include "latgerm/polytope.hpp"

namespace latgerm {

// Decoration of a base diagram: a focus-focus point together with the line
// its branch cut lives on. `cut` is the primitive direction used by the
// next mutation at this node; the current branch cut segment runs from the
// position towards the boundary in direction -cut. The line through the
// position with direction `cut` passes through the diagram center (the
// origin). `sheared_sign` picks which closed half the mutation shears:
// {x : sheared_sign * det(cut | x) >= 0}.
struct DiagramNode {
  RatVec position;
  PrimVec cut;
  int sheared_sign = +1;
};

// A 2D rational polytope decorated with nodes and branch cuts; the center
// is the origin and must be interior.
class ATFDiagram {
 public:
  ATFDiagram(RationalPolytope polytope, std::vector<DiagramNode> nodes);

  const RationalPolytope& polytope() const noexcept { return polytope_; }
  const std::vector<DiagramNode>& nodes() const noexcept { return nodes_; }

 private:
  RationalPolytope polytope_;
  std::vector<DiagramNode> nodes_;
};

// x - det(w|x) * w on the half det(w|x) >= 0, identity elsewhere;
// det(w|x) = w1*x2 - w2*x1. Continuous, fixes the line R*w pointwise.
RatVec shear(const PrimVec& w, const RatVec& x);

// Pullback of a covector under the shear: <shear_w(x), v> = <x, dual(v)>
// on the sheared half. Explicitly v - <w,v> * (-w2, w1).
IntVec shear_dual(const PrimVec& w, const IntVec& v);

// Piecewise description of a mutation: identity on one closed half of the
// cut line, the transvection x - sign*det(w|x)*w on the other. The sign
// picks which half moves; the two choices describe the same mutation up
// to a global unimodular map.
struct PiecewiseShear {
  PrimVec w;
  int sheared_sign = +1;

  bool in_sheared_half(const RatVec& x) const;
  RatVec apply(const RatVec& x) const;
  IntMatrix linear() const;  // det 1, fixes the cut line pointwise
};

struct MutationResult {
  ATFDiagram diagram;
  PiecewiseShear tau;
};

// Mutation at node i: the polytope is mapped by the piecewise shear, the
// facet list is recomputed from the sheared vertex cycle, node i's cut is
// reversed and the node slides to the midpoint between the center and the
// new fold vertex; nodes strictly inside the sheared half are carried
// along by the linear piece. Preconditions: the cut line passes through
// the center (CutNotThroughCenter), no other node sits on the cut line
// (NodeCollision), the branch cut ends at a vertex (CutNotAtVertex) and
// the opposite crossing is in the interior of an edge (CutThroughVertex).
MutationResult mutate_diagram(const ATFDiagram& d, std::size_t node_index);

// The standard monotone triangle with normals (1,0), (0,1), (-1,-1) and
// offsets 1/3, decorated with one node per corner, cuts toward the origin.
ATFDiagram standard_triangle_diagram();

// Markov triangle produced by mutating the standard triangle along a slot
// walk (slots act on the current ascending triple, as in markov_tree).
// `triple[i]` is the Markov number attached to the corner between facets i
// and i+1 of the canonically ordered polytope, so consecutive facet
// normals (u, v, w) satisfy det(u|v) = triple[0]^2 and cyclically.
struct MarkovTriangle {
  ATFDiagram diagram;
  std::array<Int, 3> triple;
};

// Stateful walk through the Markov triangles: starts at the standard
// triangle with per-node values (1,1,1); each step mutates the node ranked
// by the slot in the ascending value order (ties by node index), exactly
// the slot convention of markov_tree.
class MarkovWalk {
 public:
  MarkovWalk();

  const ATFDiagram& diagram() const noexcept { return diagram_; }
  const std::array<Int, 3>& node_values() const noexcept { return values_; }

  // Applies one slot (1..3) and returns the piecewise map of the step.
  PiecewiseShear step(int slot);

  // Markov number per corner of the canonical facet order, see delta_m.
  MarkovTriangle triangle() const;

 private:
  ATFDiagram diagram_;
  std::array<Int, 3> values_;
};

MarkovTriangle delta_m(const std::vector<int>& path);

struct InvarianceFailure {
  RatVec point;
  Rat lhs;
  Rat rhs;
};

struct InvarianceReport {
  std::size_t samples = 0;
  std::vector<InvarianceFailure> failures;
};

// Samples rational points of d's polytope deterministically from the seed
// and compares the boundary distance at x with the one at tau(x) in the
// image polytope, exactly. Expected failure count: zero.
InvarianceReport check_dia_invariance(const ATFDiagram& d, const ATFDiagram& image,
                                      const PiecewiseShear& tau, std::size_t samples,
                                      std::uint64_t seed);

// Deterministic rational point of a bounded 2D polytope (closed), by
// seeded rejection sampling from the bounding box.
RatVec sample_point_2d(const RationalPolytope& p, Rng& rng);

// Boundary point where the node's branch cut ends (along -cut from the
// center).
RatVec branch_cut_endpoint(const RationalPolytope& p, const DiagramNode& node);

}  // namespace latgerm
