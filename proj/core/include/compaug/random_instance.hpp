// Random k-drawing instances: small fan-shaped components dealt into grid
// cells, permuted and sheared independently in every drawing.
#pragma once

#include "compaug/graph.hpp"

#include <cstdint>

namespace compaug {

struct RandomInstanceOptions {
  int n = 32;               // vertices
  int r = 4;                // components, 1 <= r <= n
  int k = 2;                // drawings
  std::uint64_t seed = 0;
  bool framed = false;      // one component is a cycle around a block of the others
};

/// Throws std::invalid_argument on bad sizes.
Instance random_instance(const RandomInstanceOptions& options);

}  // namespace compaug
