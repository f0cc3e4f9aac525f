#include "feasibility.hpp"

namespace latgerm::detail {

namespace {

// Bound on x_d induced by an inequality with nonzero coefficient there:
// x_d >= value (lower) or x_d <= value (upper), strict when the source is.
struct Bound {
  RatVec coeffs;  // affine in the remaining variables
  Rat constant;
  bool strict;
};

Rat eval_bound(const Bound& b, const RatVec& x) {
  Rat v = b.constant;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) v += b.coeffs[i] * x[i];
  return v;
}

}  // namespace

std::optional<RatVec> solve_linear_system(std::vector<LinIneq> system, std::size_t dim) {
  if (dim == 0) {
    for (const auto& c : system)
      if (c.constant < 0 || (c.strict && c.constant == 0)) return std::nullopt;
    return RatVec{};
  }

  std::size_t d = dim - 1;
  std::vector<Bound> lowers, uppers;
  std::vector<LinIneq> rest;
  for (auto& c : system) {
    Rat t = c.coeffs[d];
    RatVec head(c.coeffs.begin(), c.coeffs.begin() + static_cast<std::ptrdiff_t>(d));
    if (t == 0) {
      rest.push_back({std::move(head), c.constant, c.strict});
    } else if (t > 0) {
      // x_d >= (-<head,x'> - constant) / t
      RatVec b(d);
      for (std::size_t i = 0; i < d; ++i) b[i] = -head[i] / t;
      lowers.push_back({std::move(b), -c.constant / t, c.strict});
    } else {
      RatVec b(d);
      for (std::size_t i = 0; i < d; ++i) b[i] = -head[i] / t;
      uppers.push_back({std::move(b), -c.constant / t, c.strict});
    }
  }
  for (const auto& lo : lowers)
    for (const auto& up : uppers) {
      // up - lo >= 0 (strict if either side is strict)
      LinIneq c;
      c.coeffs.resize(d);
      for (std::size_t i = 0; i < d; ++i) c.coeffs[i] = up.coeffs[i] - lo.coeffs[i];
      c.constant = up.constant - lo.constant;
      c.strict = lo.strict || up.strict;
      rest.push_back(std::move(c));
    }

  auto sub = solve_linear_system(std::move(rest), d);
  if (!sub) return std::nullopt;

  bool has_lo = false, has_up = false;
  Rat best_lo = 0, best_up = 0;
  bool lo_strict = false, up_strict = false;
  for (const auto& lo : lowers) {
    Rat v = eval_bound(lo, *sub);
    if (!has_lo || v > best_lo) {
      best_lo = v;
      lo_strict = lo.strict;
      has_lo = true;
    } else if (v == best_lo) {
      lo_strict = lo_strict || lo.strict;
    }
  }
  for (const auto& up : uppers) {
    Rat v = eval_bound(up, *sub);
    if (!has_up || v < best_up) {
      best_up = v;
      up_strict = up.strict;
      has_up = true;
    } else if (v == best_up) {
      up_strict = up_strict || up.strict;
    }
  }

  Rat value = 0;
  if (has_lo && has_up) {
    if (best_lo == best_up) {
      if (lo_strict || up_strict) return std::nullopt;
      value = best_lo;
    } else {
      value = (best_lo + best_up) / 2;
    }
  } else if (has_lo) {
    value = best_lo + 1;
  } else if (has_up) {
    value = best_up - 1;
  }

  sub->push_back(value);
  return sub;
}

}  // namespace latgerm::detail
