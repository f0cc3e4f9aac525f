#include "latgerm/reduction.hpp"

#include <algorithm>

namespace latgerm {

UpsilonParams::UpsilonParams(Int k, Rat a1, Rat a2)
    : k_(std::move(k)), a1_(std::move(a1)), a2_(std::move(a2)) {
  if (k_ < 2) fail("InvalidParams", "k must be at least 2");
  if (a1_ <= 0 || a2_ <= 0) fail("InvalidParams", "areas must be positive");
  if (a2_ * Rat(k_) >= a1_) fail("InvalidParams", "need a2 < a1 / k");
}

ProductTorusSpec::ProductTorusSpec(std::vector<Rat> areas) : areas_(std::move(areas)) {
  if (areas_.empty()) fail("InvalidParams", "a product torus needs at least one factor");
  for (const Rat& a : areas_)
    if (a <= 0) fail("InvalidParams", "factor areas must be positive");
}

Rat ProductTorusSpec::min_area() const { return *std::min_element(areas_.begin(), areas_.end()); }

Rat alpha_k(const Int& k, const Rat& c1, const Rat& c2) {
  if (k < 2) fail("InvalidParams", "k must be at least 2");
  if (c1 <= 0 || c1 + Rat(k) * c2 <= 0)
    fail("OutsideDomain", "c must be interior to {x >= 0, x + k y >= 0}");
  if (c2 >= 0) return c1 / Rat(k);
  return c1 / Rat(k) + c2;
}

ProductTorusSpec orbit_lift(const Int& k, const Rat& c1, const Rat& c2, const Rat& c3) {
  Rat area = alpha_k(k, c1, c2);
  if (c3 <= 0 || c3 >= area) fail("OutOfRange", "need 0 < c3 < alpha_k(c)");
  if (c2 >= 0) return ProductTorusSpec({c1 - Rat(k) * c3, c3 + c2, c3});
  return ProductTorusSpec({c1 - Rat(k) * c3 + Rat(k) * c2, c3, c3 - c2});
}

bool in_Uk(const Int& k, const Rat& a1, const Rat& a2) {
  if (k < 2) fail("InvalidParams", "k must be at least 2");
  if (a1 <= 0 || a2 <= 0) fail("InvalidParams", "areas must be positive");
  return a1 <= Rat(k + 1) * a2 && Rat(k) * a2 < a1;
}

bool is_monotone_upsilon(const Int& k, const Rat& a1, const Rat& a2) {
  if (k < 2) fail("InvalidParams", "k must be at least 2");
  if (a1 <= 0 || a2 <= 0) fail("InvalidParams", "areas must be positive");
  return a1 == Rat(k + 1) * a2;
}

VersalImage versal_to_product(const UpsilonParams& p, const std::array<Rat, 3>& b) {
  if (b[1] == 0) return Wall{};
  Rat k(p.k());
  Rat head = p.a1() - k * p.a2();
  std::vector<Rat> out;
  if (b[1] > 0) {
    out = {head + b[0] - k * b[2], p.a2() + b[1] + b[2], p.a2() + b[2]};
  } else {
    out = {head + b[0] + k * b[1] - k * b[2], p.a2() + b[2], p.a2() - b[1] + b[2]};
  }
  for (const Rat& x : out)
    if (x <= 0) fail("NonPositiveOutput", "flux too large: a factor area vanished");
  return ProductTorusSpec(std::move(out));
}

}  // namespace latgerm
