#include "latgerm/svg.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace latgerm {

namespace {

constexpr int kDigits = 20;

constexpr std::array<const char*, 8> kChamberFill = {
    "#cfe8ff", "#ffd9c2", "#d9f2d0", "#f0d9f2", "#fff3b0", "#c2f0ee", "#e8d8c3", "#dfe3e8"};

struct Mapper {
  Rat min_x, min_y, scale;
  Rat height;

  std::string x(const Rat& wx) const { return rat_to_decimal((wx - min_x) * scale, kDigits); }
  std::string y(const Rat& wy) const {
    return rat_to_decimal(height - (wy - min_y) * scale, kDigits);
  }
};

std::string point_pair(const Mapper& m, const RatVec& p) { return m.x(p[0]) + "," + m.y(p[1]); }

}  // namespace

std::string render_svg(const ATFDiagram& d, const RenderOptions& options) {
  if (options.width <= 0 || options.height <= 0)
    fail("BadRenderOptions", "viewport dimensions must be positive");
  Polygon2 poly = vertices_2d(d.polytope());  // throws Unbounded

  Rat min_x = poly.vertices[0][0], max_x = min_x;
  Rat min_y = poly.vertices[0][1], max_y = min_y;
  for (const auto& v : poly.vertices) {
    min_x = std::min(min_x, v[0]);
    max_x = std::max(max_x, v[0]);
    min_y = std::min(min_y, v[1]);
    max_y = std::max(max_y, v[1]);
  }
  Rat span_x = max_x - min_x, span_y = max_y - min_y;
  Rat margin = std::max(span_x, span_y) / 10;
  min_x -= margin;
  min_y -= margin;
  span_x += 2 * margin;
  span_y += 2 * margin;
  Rat sx = Rat(options.width) / span_x;
  Rat sy = Rat(options.height) / span_y;
  Mapper map{min_x, min_y, std::min(sx, sy), Rat(options.height)};

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
      << "\" height=\"" << options.height << "\">\n";

  if (options.show_chambers) {
    for (const auto& chamber : chambers_2d(d.polytope())) {
      svg << "  <polygon class=\"chamber\" points=\"";
      for (std::size_t i = 0; i < chamber.triangle.size(); ++i) {
        if (i) svg << " ";
        svg << point_pair(map, chamber.triangle[i]);
      }
      svg << "\" fill=\"" << kChamberFill[chamber.facet % kChamberFill.size()]
          << "\" stroke=\"none\"/>\n";
    }
  }

  svg << "  <polygon class=\"outline\" points=\"";
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    if (i) svg << " ";
    svg << point_pair(map, poly.vertices[i]);
  }
  svg << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";

  if (options.show_nodes) {
    for (const auto& node : d.nodes()) {
      RatVec end = branch_cut_endpoint(d.polytope(), node);
      svg << "  <line class=\"cut\" x1=\"" << map.x(node.position[0]) << "\" y1=\""
          << map.y(node.position[1]) << "\" x2=\"" << map.x(end[0]) << "\" y2=\"" << map.y(end[1])
          << "\" stroke=\"#555555\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (const auto& node : d.nodes()) {
      const std::string cx = map.x(node.position[0]);
      const std::string cy = map.y(node.position[1]);
      svg << "  <path class=\"node\" d=\"M -5 -5 L 5 5 M -5 5 L 5 -5\" transform=\"translate("
          << cx << "," << cy << ")\" stroke=\"#bb0000\" stroke-width=\"1.5\"/>\n";
    }
  }

  if (options.show_labels) {
    for (const auto& v : poly.vertices) {
      svg << "  <text class=\"label\" x=\"" << map.x(v[0]) << "\" y=\"" << map.y(v[1])
          << "\" font-family=\"monospace\" font-size=\"12\">(" << rat_to_string(v[0]) << ", "
          << rat_to_string(v[1]) << ")</text>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace latgerm
