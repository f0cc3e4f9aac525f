#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latgerm/atf.hpp"
#include "latgerm/lattice.hpp"
#include "latgerm/polytope.hpp"
#include "latgerm/reduction.hpp"

namespace latgerm {

// Exact min-form germ: the function b -> constant + min_i <b, v_i> up to
// the GL(n, Z) reparametrization action. Vectors are a set (nonempty,
// distinct, nonzero), stored sorted for canonical serialization.
class Germ {
 public:
  Germ(Rat constant, std::vector<IntVec> vectors);

  const Rat& constant() const noexcept { return constant_; }
  const std::vector<IntVec>& vectors() const noexcept { return vectors_; }
  std::size_t dim() const noexcept { return dim_; }

  friend bool operator==(const Germ& a, const Germ& b) {
    return a.constant_ == b.constant_ && a.vectors_ == b.vectors_;
  }

 private:
  Rat constant_;
  std::vector<IntVec> vectors_;
  std::size_t dim_ = 0;
};

struct AffineFunctional {
  Rat constant;
  RatVec linear;
};

// Sign condition cutting out one piece of a piecewise minimum.
enum class Region { everywhere, coord_positive, coord_negative };

struct MinPiece {
  Region region = Region::everywhere;
  std::size_t coord = 0;  // the coordinate carrying the sign condition
  std::vector<AffineFunctional> functionals;
};

struct PiecewiseMin {
  std::size_t dim = 0;
  std::vector<MinPiece> pieces;
};

// constant = min a_i, vectors = {e_i : a_i minimal}.
Germ germ_product_torus(const ProductTorusSpec& t);

// constant = distance of x to the boundary, vectors = argmin facet normals.
// Throws OnBoundary unless x is strictly interior.
Germ germ_toric_fibre(const RationalPolytope& p, const RatVec& x);

// Three regimes in d = a1 - k*a2:
//   d < a2:  constant d,  vectors {(1,k,-k), (1,0,-k)}
//   d = a2:  constant d,  vectors {(1,k,-k), (1,0,-k), (0,0,1)}
//   d > a2:  constant a2, vectors {(0,0,1)}.
Germ germ_upsilon(const UpsilonParams& p);

// Vector normalization for the lifted Markov-triangle germs. `literal`
// appends a unit last coordinate to the triangle normals; `cone` uses the
// primitive facet normals of the cone over the triangle instead. The two
// disagree by a non-unimodular factor; literal is the default and is the
// normalization whose pairwise indices reproduce the Markov numbers.
enum class ThetaVectorMode { literal, cone };

// constant = a/3 (literal) resp. the cone distance at height a (cone);
// vectors are the lifted triangle normals in the chosen normalization.
Germ germ_theta(const MarkovTriangle& t, const Rat& area,
                ThetaVectorMode mode = ThetaVectorMode::literal);

// Product of a lifted Markov-triangle torus with round factors a4..an;
// requires area/3 <= min(tail) (throws TailTooSmall). Vectors are the
// zero-padded literal theta vectors plus e_i for every tail factor of
// minimal size.
Germ germ_theta_product(const MarkovTriangle& t, const Rat& area, const std::vector<Rat>& tail);

// The two off-wall pieces (b2 > 0, b2 < 0) of the displacement energy of
// the versal family, read off versal_to_product entrywise.
PiecewiseMin upsilon_versal_pieces(const UpsilonParams& p);

// Dominant-term extraction: keep the functionals achieving the minimal
// constant, drop any that is pointwise dominated by another one on its
// piece's closed region, dedupe across pieces. Surviving linear parts must
// be integral (throws NonIntegerVector). Throws NonPositiveConstant if a
// constant is not positive.
Germ extract_germ(const PiecewiseMin& pw);

struct GermInvariants {
  Rat constant;
  std::size_t dim = 0;
  std::size_t count = 0;
  std::vector<Int> pair_index_multiset;    // sorted
  std::vector<Int> triple_index_multiset;  // sorted; empty when count < 3 or dim < 3
  std::optional<Int> full_index;           // all vectors at once, when count <= dim
  IntMatrix canonical_matrix;              // permutation-minimized normal form
  bool canonical_exact = true;             // false when the search was capped
};

GermInvariants germ_invariants(const Germ& g);

struct Equivalent {
  IntMatrix witness;  // maps the left germ's vectors onto the right's
};

struct Inequivalent {
  std::string invariant;  // "constant" | "cardinality" | "pairwise_index" |
                          // "triple_index" | "full_index" | "canonical_form"
  std::string left;
  std::string right;
};

struct Undecided {
  std::string reason;
};

using GermComparison = std::variant<Equivalent, Inequivalent, Undecided>;

// Complete decision of germ equality up to GL(n, Z): constants must agree
// and some unimodular map must carry one vector set onto the other. The
// search compares column normal forms over all orderings (capped at 8
// vectors; with more vectors and all fast invariants equal it reports
// Undecided). A found witness is verified before being returned.
GermComparison germ_equivalent(const Germ& a, const Germ& b);

}  // namespace latgerm
