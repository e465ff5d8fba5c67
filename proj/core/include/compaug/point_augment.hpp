// Ordered planar paths through point sets, and the compatible augmentation
// of edgeless graphs built on them.
#pragma once

#include "compaug/chain.hpp"
#include "compaug/graph.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace compaug {

/// Per-hop subdivision vertices never exceed kPointHopConstant * (gap + 1),
/// where gap is the rank difference of the hop's endpoints.
inline constexpr int kPointHopConstant = 4;

/// ranks[i][v]: number of points of drawing i before v in (x, y)
/// lexicographic order, i.e. the x-rank under an infinitesimal shear.
std::vector<std::vector<int>> compute_ranks(std::span<const std::vector<Point2>> drawings);

struct OrderedPath {
  std::vector<Point2> vertices;
  std::vector<std::size_t> site;  // site[j]: index in vertices of the j-th visited point

  std::size_t hop_extras(std::size_t j) const { return site[j + 1] - site[j] - 1; }
};

struct OrderedPathOptions {
  bool check_invariants = false;  // verify the cone invariants after every hop
  bool shortcuts = true;          // use a direct segment when it is certifiably safe
};

/// Thrown by draw_ordered_path when an invariant check fails.
struct EscapeInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Planar path through points[order[0]], points[order[1]], ... in that order.
/// Throws std::invalid_argument on duplicate points or a bad permutation.
OrderedPath draw_ordered_path(std::span<const Point2> points, std::span<const int> order,
                              const OrderedPathOptions& options = {});

/// Cone geometry of a partial construction. Cones open downward from
/// (x_v, apex_y[v]) and are cut off at the baseline.
struct ConeState {
  Scalar baseline;
  std::vector<Scalar> apex_y;   // per point
  std::vector<Scalar> slope;    // half-width per unit height
};

/// Violated cone invariants after `current` hops, described in words; empty
/// when all hold. Points must have pairwise distinct x-coordinates.
std::vector<std::string> escape_violations(std::span<const Point2> points,
                                           std::span<const int> order, std::size_t current,
                                           const ConeState& state,
                                           std::span<const Point2> path);

struct PointAugmentation {
  std::vector<int> order;            // vertex indices in path order
  std::vector<Scalar> hop_distance;  // max rank gap over drawings, per hop
  Chain chain;
};

/// Requires an edgeless graph. Throws std::invalid_argument otherwise.
PointAugmentation augment_points(const Instance& instance,
                                 const OrderedPathOptions& options = {});

}  // namespace compaug
