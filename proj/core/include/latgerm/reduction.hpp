#pragma once

#include <array>
#include <variant>
#include <vector>

#include "latgerm/numeric.hpp"

namespace latgerm {

// Parameters (k, a1, a2) of the two-parameter torus family over the
// orbifold reduced space: k >= 2 and 0 < a2 < a1 / k, so the lifted curve
// fits in the reduced area.
class UpsilonParams {
 public:
  UpsilonParams(Int k, Rat a1, Rat a2);

  const Int& k() const noexcept { return k_; }
  const Rat& a1() const noexcept { return a1_; }
  const Rat& a2() const noexcept { return a2_; }

 private:
  Int k_;
  Rat a1_, a2_;
};

// Areas of the circle factors of a product torus; all positive.
class ProductTorusSpec {
 public:
  explicit ProductTorusSpec(std::vector<Rat> areas);

  const std::vector<Rat>& areas() const noexcept { return areas_; }
  Rat min_area() const;

 private:
  std::vector<Rat> areas_;
};

// Symplectic area of the order-k reduced space over c = (c1, c2) interior
// to {x >= 0, x + k*y >= 0}: c1/k for c2 >= 0, else c1/k + c2. Throws
// OutsideDomain.
Rat alpha_k(const Int& k, const Rat& c1, const Rat& c2);

// The product torus lying over the circle orbit of area c3 in the reduced
// space at level c; requires 0 < c3 < alpha_k(c) (throws OutOfRange).
ProductTorusSpec orbit_lift(const Int& k, const Rat& c1, const Rat& c2, const Rat& c3);

// Parameter window a1/(k+1) <= a2 < a1/k of the family, and the monotone
// locus a1 = (k+1) * a2.
bool in_Uk(const Int& k, const Rat& a1, const Rat& a2);
bool is_monotone_upsilon(const Int& k, const Rat& a1, const Rat& a2);

// Marker outcome of versal_to_product where the deformed torus is not a
// product torus (the wall b2 = 0).
struct Wall {};

using VersalImage = std::variant<ProductTorusSpec, Wall>;

// Product torus equivalent to the versal deformation at flux b:
//   b2 > 0: (a1 - k a2 + b1 - k b3, a2 + b2 + b3, a2 + b3)
//   b2 < 0: (a1 - k a2 + b1 + k b2 - k b3, a2 + b3, a2 - b2 + b3)
//   b2 = 0: Wall.
// Throws NonPositiveOutput when b is too large for the formulas.
VersalImage versal_to_product(const UpsilonParams& p, const std::array<Rat, 3>& b);

}  // namespace latgerm
