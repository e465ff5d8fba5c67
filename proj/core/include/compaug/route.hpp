// Routing one drawing's path through the attachment corners of a region in
// a prescribed order, keeping every component on the path's right.
#pragma once

#include "compaug/boundary_cost.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace compaug {

/// Per-hop vertex counts never exceed kRouteHopConstant * (cost + 1).
inline constexpr int kRouteHopConstant = 8;

/// Clearances for each hop j in [0, r - 1): eps grows, delta shrinks, tau
/// shrinks, lambda is fixed below every delta. delta_ratio scales delta
/// against eps; thin wedges need it small.
struct ClearanceSchedule {
  Scalar eps_max;
  Scalar tau0;
  Scalar delta_ratio{1, 4};
  int r = 1;

  Scalar eps(int j) const;
  Scalar delta(int j) const;
  Scalar tau(int j) const;
  Scalar lambda() const;
};

struct RouteOptions {
  bool check_invariants = false;  // run the per-hop clearance checks
  int max_rounds = 64;
};

struct RouteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Route {
  std::vector<Point2> points;      // polyline; site points are existing vertices
  std::vector<std::size_t> site;   // site[j]: index in points of the j-th visited corner
  std::vector<int> order;          // participant indices in visiting order
  ClearanceSchedule schedule;
  int rounds = 0;                  // refinement rounds used

  std::size_t hop_vertices(std::size_t j) const { return site[j + 1] - site[j] - 1; }
};

/// Draws the route and certifies it: planar together with the drawing, every
/// participant right of the route inside its attachment wedge, hop counts
/// within budget. Halves eps, tau and the delta ratio and retries on
/// failure; throws
/// RouteError after options.max_rounds failed rounds.
Route draw_route(const PlanarDrawing& drawing, const Region& region,
                 const ConnectedAugmentation& ca, const CostTable& table,
                 std::span<const Corner> attachment, std::span<const int> order,
                 const RouteOptions& options = {});

/// Single attempt with a fixed schedule; returns the failed certificate
/// instead of retrying. Empty string on success.
std::string try_route(const PlanarDrawing& drawing, const Region& region,
                      const ConnectedAugmentation& ca, const CostTable& table,
                      std::span<const Corner> attachment, std::span<const int> order,
                      const ClearanceSchedule& schedule, bool check_invariants, Route& out);

/// Right-of test at an attachment corner: the route's neighbours of the
/// corner vertex sit inside the corner's wedge, and turning clockwise from
/// the predecessor the successor comes next among all edges at the vertex.
/// A route end has no successor and passes when its predecessor is in the
/// wedge. Throws std::invalid_argument if `site` is out of range.
bool check_right_of(const PlanarDrawing& drawing, const Corner& corner,
                    std::span<const Point2> route, std::size_t site);

}  // namespace compaug
