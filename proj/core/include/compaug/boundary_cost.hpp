// Regions to connect, their connected augmentations, offset polygons along
// boundary walks, and the per-drawing cost table used to embed components.
#pragma once

#include "compaug/embedding.hpp"

#include <optional>
#include <span>
#include <vector>

namespace compaug {

/// A component taking part in one region, with the boundary walk it shows
/// to that region (region on the left of the walk).
struct Participant {
  int component = -1;
  BoundaryCycle facing;
  bool enclosing = false;  // the walk bounds the region from outside
};

/// The components to connect inside one face. participants[0] is the base:
/// the enclosing component for a bounded face, otherwise the component with
/// the smallest label.
struct Region {
  int face = 0;
  std::vector<Participant> participants;
};

/// Components on the unbounded face.
Region outer_region(const PlanarDrawing& drawing, const Embedding& embedding);

/// A bounded face: its enclosing cycle plus the components whose outer
/// cycle lies directly inside it.
Region face_region(const PlanarDrawing& drawing, const Embedding& embedding, int face);

struct ConnectedAugmentation {
  std::vector<std::pair<int, int>> extra_edges;  // vertex index pairs, r - 1 of them
  RotationSystem rotation;  // participants' facing edges plus extra edges
  BoundaryCycle boundary;   // walk of the augmented region boundary
};

/// Left-to-right sweep: each participant's lexicographically smallest
/// vertex is linked to the nearest vertex of the part connected so far
/// that it sees inside the region.
ConnectedAugmentation connect_components(const PlanarDrawing& drawing, const Region& region);

/// Unit (max-norm) direction pointing into the face wedge of a corner with
/// prev != next.
Point2 corner_direction(const Point2& prev, const Point2& v, const Point2& next);

/// The eps-independent part of offset_polygon: copy i sits at
/// position[base[i]] + eps * direction[i].
struct OffsetFrame {
  std::vector<int> base;
  std::vector<Point2> direction;
  std::vector<int> first_copy;  // per corner of the walk

  std::size_t size() const { return base.size(); }
  Point2 at(std::size_t i, std::span<const Point2> position, const Scalar& eps) const {
    return position[base[i]] + eps * direction[i];
  }
  std::vector<Point2> polygon(std::span<const Point2> position, const Scalar& eps) const;
};

OffsetFrame offset_frame(const BoundaryCycle& walk, std::span<const Point2> position);

/// eps-copies of the corners of a walk, in walk order: one per corner, two
/// per corner at a degree-1 vertex (either side of the tip), and a diamond
/// (west, north, east, south) for an isolated vertex. first_copy, when
/// given, receives the index of each corner's first copy.
std::vector<Point2> offset_polygon(const BoundaryCycle& walk, std::span<const Point2> position,
                                   const Scalar& eps, std::vector<int>* first_copy = nullptr);

/// Simple closed polygon (no repeated points, only consecutive edges meet
/// and only at their shared endpoint).
bool is_simple_polygon(std::span<const Point2> polygon);

/// Simple, and touches none of the given segments or points.
bool is_simple_fattening(std::span<const Point2> polygon, std::span<const Segment> avoid,
                         std::span<const Point2> avoid_points = {});

/// min over drawings of the smallest nonzero coordinate difference, divided
/// by 8n. Callers still certify the offsets they build from it.
Scalar safe_epsilon(std::span<const PlanarDrawing> drawings);

/// Attachment corner of a participant: on its facing walk, the corner at the
/// smallest-label vertex, ties by (prev label, next label).
Corner attachment_corner(const Participant& p, const LabelledGraph& g);

/// Bounded face whose enclosing cycle traverses the directed edge u -> v;
/// -1 when that edge lies on a component's outer cycle.
int face_with_dart(const Embedding& embedding, int u, int v);

struct CostTable {
  std::vector<int> walk_index;     // per participant: its corner in the augmented walk
  std::vector<int> position;       // per participant: steps from the base corner
  std::vector<long> rank;          // per participant: cost from the base
  std::vector<long> boundary_size; // per participant: facing walk length
  long walk_size = 0;
};

/// The corner of the augmented walk lying in the wedge of an attachment
/// corner: the one entered along the same edge. For isolated vertices, the
/// corner with the smallest previous-vertex label.
int augmented_corner(const BoundaryCycle& augmented, const Corner& attachment,
                     const LabelledGraph& g);

CostTable cost_table(const Region& region, const ConnectedAugmentation& ca,
                     std::span<const Corner> attachment, const LabelledGraph& g);

/// Cost between two participants computed from the table.
long table_cost(const CostTable& table, int p, int q);

}  // namespace compaug
