#pragma once

#include <optional>
#include <vector>

#include "latgerm/numeric.hpp"
#include "latgerm/reduction.hpp"

namespace latgerm {

// Darboux chart data: ball capacity R and the minimal sphere area seen by
// chart-compatible almost complex structures (nullopt = infinite, e.g. in
// the aspherical case). Both are caller-supplied.
struct ChartSpec {
  Rat radius;
  std::optional<Rat> lambda_s;  // nullopt means +infinity

  static ChartSpec make(Rat radius, std::optional<Rat> lambda_s);
};

struct CsMargins {
  Rat slack_capacity;                // R - (sum + min)
  std::optional<Rat> slack_sphere;   // lambda_s - min, nullopt = infinite
};

struct CsResult {
  bool cs;
  CsMargins margins;
};

// Strict smallness test: sum(a) + min(a) < R and min(a) < lambda_s. When
// it holds, the displacement energy of the embedded torus equals min(a);
// the margins report the two slacks.
CsResult has_property_cs(const ProductTorusSpec& torus, const ChartSpec& chart);

enum class TorusFamily { upsilon, theta };

// Size threshold under which the germs of embedded family members survive:
// min(R/2, lambda_s) for the upsilon family, min(3R/4, lambda_s) for the
// theta family.
Rat epsilon_threshold(TorusFamily family, const ChartSpec& chart);

struct EmbeddingReport {
  bool ok;
  bool tail_ok;       // area/3 <= min(tail)
  bool capacity_ok;   // 4*area/3 + sum(tail) < R
  bool sphere_ok;     // area/3 < lambda_s
  Rat capacity_lhs;
  Rat area_third;
};

// Embedding conditions for the product-family tori: all three clauses must
// hold strictly (the tail clause is non-strict).
EmbeddingReport embedding_condition(const Rat& area, const std::vector<Rat>& tail,
                                   const ChartSpec& chart);

}  // namespace latgerm
