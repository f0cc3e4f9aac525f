#pragma once

#include <optional>
#include <vector>

#include "latgerm/numeric.hpp"

namespace latgerm::detail {

// One linear condition <coeffs, x> + constant >= 0 (or > 0 when strict).
struct LinIneq {
  RatVec coeffs;
  Rat constant;
  bool strict = false;
};

// Exact Fourier-Motzkin elimination. Returns a witness point when the
// system is feasible, nullopt otherwise. Intended for the small systems
// arising from polytope facets (a handful of variables and constraints).
std::optional<RatVec> solve_linear_system(std::vector<LinIneq> system, std::size_t dim);

}  // namespace latgerm::detail
