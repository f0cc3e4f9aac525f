#pragma once

#include <string>

#include "latgerm/atf.hpp"

namespace latgerm {

struct RenderOptions {
  int width = 640;
  int height = 480;
  bool show_chambers = false;
  bool show_nodes = true;  // crosses and dashed branch cuts
  bool show_labels = false;
};

// Deterministic SVG 1.1 picture of a bounded base diagram: polygon
// outline, crosses at the nodes, dashed branch cut segments, optional
// chamber shading and vertex labels. Identical bytes for identical inputs;
// coordinates are 20-digit decimal expansions of the exact rationals.
std::string render_svg(const ATFDiagram& d, const RenderOptions& options);

}  // namespace latgerm
