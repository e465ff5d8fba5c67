// Brute-force checks shared by the unit tests and the acceptance binary.
// Written against the definitions, not against the library's shortcuts.
#pragma once

#include "compaug/augment.hpp"
#include "compaug/boundary_cost.hpp"

#include <string>
#include <vector>

namespace oracle {

/// Every region of one drawing that holds more than one component: the
/// outer face when it borders several, and each bounded face with holes.
std::vector<compaug::Region> regions_of(const compaug::PlanarDrawing& d, const compaug::Embedding& e);

/// Cost of the walk from attachment p to attachment q along the augmented
/// boundary, counted step by step: walked edges, plus twice the boundary
/// sizes of every participant whose attachment the walk passes (both ends
/// included), minus the sizes at the two ends. p == q gives 0.
long sigma(const compaug::Region& region, const compaug::ConnectedAugmentation& ca,
           const std::vector<compaug::Corner>& attachment, const compaug::LabelledGraph& g, int p, int q);

/// Step index of attachment p on the augmented walk, found by scanning.
int walk_step(const compaug::ConnectedAugmentation& ca, const compaug::Corner& attachment,
              const compaug::LabelledGraph& g);

/// Empty when the cost table of every region of every drawing matches the
/// walk oracle, ranks stay below 6n and differences telescope.
std::string check_cost_tables(const compaug::Instance& in);

/// Every edge pair and vertex-edge pair tested exactly; quadratic.
bool brute_planar(const compaug::PlanarDrawing& d);

/// Independent result check: positions kept, input edges kept, connected
/// (union-find on labels), planar by brute_planar when the drawing has at
/// most `brute_limit` edges (validate_planar above it), and isomorphic.
std::string check_result(const compaug::Instance& in, const compaug::CompatibleResult& res,
                         std::size_t brute_limit = 1500);

}  // namespace oracle
