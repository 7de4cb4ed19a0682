#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "alleyflow/flow.hpp"
#include "alleyflow/graph.hpp"
#include "alleyflow/matrix.hpp"

namespace alleyflow {

struct MissingCategory : Error {
  using Error::Error;
};
struct EmptyMatrix : Error {
  using Error::Error;
};
struct InvalidRenderSpec : Error {
  using Error::Error;
};
struct UnknownPalette : Error {
  using Error::Error;
};

// Styling for map and heatmap output. Stroke widths are indexed by flow
// category low..very_high and must be strictly increasing. Palettes map
// the minimum value to the cool end and the maximum to the hot end.
struct RenderSpec {
  std::array<double, 4> stroke_widths{1.5, 3.0, 5.0, 8.0};
  bool dash_low = true;
  std::string palette = "bluered";  // bluered | heat | grayscale
  double padding = 20.0;            // canvas margin, svg units
  double scale = 10.0;              // svg units per meter (map rendering)
  double cell_size = 8.0;           // heatmap cell edge, svg units
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

// Color at position t in [0, 1] of a named sequential ramp, cool to hot.
Rgb palette_color(std::string_view palette, double t);

// One line element per alley at node coordinates (y axis flipped to screen
// convention), stroke width by category, low category dashed, node circles
// and labels on top. Element order is fixed (alleys by node-index pair,
// nodes by index) so identical inputs render byte-identical SVG.
std::string render_network_svg(const WalkwayGraph& graph,
                               const CategorizedAlleys& categories,
                               const RenderSpec& spec);

// One rect per cell, finite values mapped linearly onto the palette.
// +inf cells and cells flagged in `structural` (no-data cells, e.g. pairs
// without an alley when rendering flow) use a reserved neutral gray.
std::string render_heatmap_svg(const Matrix<double>& matrix,
                               const RenderSpec& spec,
                               const Matrix<std::uint8_t>* structural = nullptr);

}  // namespace alleyflow
