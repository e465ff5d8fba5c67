// A chain of hops through existing vertices, realized once per drawing.
// Shared output shape of the point and component routers.
#pragma once

#include "compaug/geometry.hpp"

#include <vector>

namespace compaug {

struct Hop {
  int from = -1;  // vertex index
  int to = -1;
  // interior[i]: subdivision points of this hop in drawing i, from -> to.
  std::vector<std::vector<Point2>> interior;

  std::size_t budget() const;  // max interior size over drawings
};

struct Chain {
  std::vector<Hop> hops;

  std::size_t total_budget() const;
};

/// Subdivides the first segment of a hop polyline with evenly spaced points
/// until it has `count` interior points. Precondition: count >= interior size.
std::vector<Point2> pad_hop(const Point2& from, const std::vector<Point2>& interior,
                            const Point2& to, std::size_t count);

}  // namespace compaug
