#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cakecut/cake.hpp"
#include "cakecut/depth.hpp"

namespace cakecut {

struct HeatmapOverlay {
  int resolution = 128;
};

using SvgOverlay = std::variant<std::monostate, Cut, HeatmapOverlay>;

// Depth upper values at the centers of a resolution x resolution grid over the
// inflated bounding box. Row 0 is the bottom row (smallest y).
struct HeatmapGrid {
  int resolution = 0;
  Vector lo;
  Vector hi;
  std::vector<double> values;

  double at(int row, int col) const { return values[static_cast<std::size_t>(row * resolution + col)]; }
  Vector cell_center(int row, int col) const;
};

// Throws UnsupportedDimension unless dim == 2, InvalidArgument unless
// 1 <= resolution <= 512. Rows are evaluated on several threads.
HeatmapGrid heatmap_grid(const Cake& c, int resolution);

// SVG 1.1 document. Elements carry classes "piece", "cut-line", "cut-shade",
// "heat-cell", "isoline" and "legend".
std::string render_svg(const Cake& c, const SvgOverlay& overlay = std::monostate{});

}  // namespace cakecut
