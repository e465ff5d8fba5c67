// SVG pictures of drawings. Coordinates are printed from the exact values
// at a fixed 1e-6 precision; nothing here feeds back into geometry.
#pragma once

#include "compaug/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace compaug {

struct SvgLayers {
  std::vector<std::pair<int, int>> highlighted;  // vertex index pairs drawn red
  std::vector<std::vector<Point2>> underlay;     // closed polygons drawn light gray
};

/// Black edges and vertices, red highlighted edges over them, gray polygons
/// underneath. y grows upward as in the drawing. Deterministic.
std::string render_svg(const PlanarDrawing& drawing, const SvgLayers& layers = {});

/// Fixed-point text with six decimals, rounded half away from zero.
std::string fixed6(const Scalar& s);

/// The fattened outer boundary of every component at the safe epsilon of
/// the drawing.
std::vector<std::vector<Point2>> fattenings(const PlanarDrawing& drawing);

}  // namespace compaug
