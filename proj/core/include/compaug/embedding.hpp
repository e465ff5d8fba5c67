// Combinatorial embedding of a planar straight-line drawing: rotation
// system, boundary cycles, faces and their component containment.
#pragma once

#include "compaug/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace compaug {

/// Per vertex, the neighbours in counterclockwise angular order.
struct RotationSystem {
  std::vector<std::vector<int>> ccw;

  /// Neighbour that follows `from` when turning clockwise around `v`.
  int clockwise_after(int v, int from) const;
  /// Neighbour that follows `from` when turning counterclockwise around `v`.
  int counterclockwise_after(int v, int from) const;
};

/// A corner: the wedge at `vertex` between the incoming edge from `prev`
/// and the outgoing edge to `next`, as met by a face walk. Isolated
/// vertices have prev == next == -1.
struct Corner {
  int vertex = -1;
  int prev = -1;
  int next = -1;

  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Closed walk around a face with the face on the left. walk[i] -> walk[i+1]
/// are the traversed directed edges; corner i sits at walk[i].
struct BoundaryCycle {
  std::vector<int> walk;
  int component = -1;
  bool isolated = false;  // single vertex, no edges

  std::size_t size() const { return isolated ? 0 : walk.size(); }
  Corner corner(std::size_t i) const;
  std::vector<Corner> corners() const;
};

/// A face region of the drawing. The unbounded face has no enclosing cycle.
struct Face {
  int enclosing_cycle = -1;              // index into FaceStructure::cycles
  std::vector<int> boundary_cycles;      // outer cycles of components inside
  std::vector<int> components;           // components whose outer cycle bounds it
};

struct FaceStructure {
  std::vector<BoundaryCycle> cycles;
  std::vector<int> outer_cycle_of_component;
  std::vector<Face> faces;               // faces[0] is the unbounded face
  std::vector<int> face_of_component;    // face that contains the component
  int outer_face = 0;
};

struct Embedding {
  RotationSystem rotation;
  FaceStructure faces;
};

/// Rotation system by exact angle, faces by edge-side walking, outer cycles
/// via the bottommost-then-leftmost vertex, containment by point-in-polygon
/// tests on one vertex per component. Throws std::invalid_argument when the
/// drawing is not planar.
Embedding derive_embedding(const PlanarDrawing& drawing);

/// Same without re-validating planarity (caller has done it).
Embedding derive_embedding_unchecked(const PlanarDrawing& drawing);

RotationSystem derive_rotation(const PlanarDrawing& drawing);

/// Face walk starting with the directed edge u -> v.
BoundaryCycle trace_cycle(const RotationSystem& rotation, int u, int v);

/// Directed edge (w -> v) that lies on the outer cycle of v's component,
/// where v is the bottommost-then-leftmost vertex of `vertices`.
std::pair<int, int> outer_dart(const PlanarDrawing& drawing,
                               const RotationSystem& rotation,
                               const std::vector<int>& vertices);

/// Eulerian tour of the outer boundary of one connected component (given as
/// vertex indices), walked with the outer face on the left.
/// Throws std::invalid_argument if the vertex set is not connected.
BoundaryCycle outer_boundary(const std::vector<int>& component,
                             const PlanarDrawing& drawing);

/// Combinatorial isomorphism: equal rotation systems, equal outer cycles
/// and equal component-in-face containment. Throws std::invalid_argument
/// when the two drawings are over different graphs.
bool drawings_isomorphic(const PlanarDrawing& a, const PlanarDrawing& b);

/// Like drawings_isomorphic but names the first discrepancy found.
std::optional<std::string> isomorphism_mismatch(const PlanarDrawing& a,
                                                const PlanarDrawing& b);

}  // namespace compaug
