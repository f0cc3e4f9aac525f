#include "latgerm/locality.hpp"

#include <algorithm>
#include <numeric>

namespace latgerm {

ChartSpec ChartSpec::make(Rat radius, std::optional<Rat> lambda_s) {
  if (radius <= 0) fail("InvalidChart", "chart radius must be positive");
  if (lambda_s && *lambda_s <= 0) fail("InvalidChart", "lambda_s must be positive");
  return ChartSpec{std::move(radius), std::move(lambda_s)};
}

CsResult has_property_cs(const ProductTorusSpec& torus, const ChartSpec& chart) {
  Rat sum = std::accumulate(torus.areas().begin(), torus.areas().end(), Rat(0));
  Rat m = torus.min_area();
  CsResult out;
  out.margins.slack_capacity = chart.radius - sum - m;
  if (chart.lambda_s) out.margins.slack_sphere = *chart.lambda_s - m;
  bool capacity = sum + m < chart.radius;
  bool sphere = !chart.lambda_s || m < *chart.lambda_s;
  out.cs = capacity && sphere;
  return out;
}

Rat epsilon_threshold(TorusFamily family, const ChartSpec& chart) {
  Rat linear = family == TorusFamily::upsilon ? chart.radius / 2 : chart.radius * Rat(3, 4);
  if (!chart.lambda_s) return linear;
  return std::min(linear, *chart.lambda_s);
}

EmbeddingReport embedding_condition(const Rat& area, const std::vector<Rat>& tail,
                                   const ChartSpec& chart) {
  if (area <= 0) fail("InvalidParams", "area must be positive");
  if (tail.empty()) fail("InvalidParams", "tail must be nonempty");
  for (const Rat& a : tail)
    if (a <= 0) fail("InvalidParams", "tail areas must be positive");

  EmbeddingReport r;
  r.area_third = area / 3;
  Rat tail_sum = std::accumulate(tail.begin(), tail.end(), Rat(0));
  Rat tail_min = *std::min_element(tail.begin(), tail.end());
  r.capacity_lhs = area * Rat(4, 3) + tail_sum;
  r.tail_ok = r.area_third <= tail_min;
  r.capacity_ok = r.capacity_lhs < chart.radius;
  r.sphere_ok = !chart.lambda_s || r.area_third < *chart.lambda_s;
  r.ok = r.tail_ok && r.capacity_ok && r.sphere_ok;
  return r;
}

}  // namespace latgerm
