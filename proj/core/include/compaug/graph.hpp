// Labelled graphs and their straight-line drawings.
#pragma once

#include "compaug/geometry.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace compaug {

/// Undirected simple graph whose vertices carry integer labels. Internally
/// every vertex has a dense index (position in the sorted label list).
class LabelledGraph {
 public:
  using Edge = std::pair<int, int>;  // vertex indices, first < second

  /// Throws std::invalid_argument on self-loops, parallel edges, duplicate
  /// labels or edges naming unknown labels.
  static LabelledGraph from_labels(std::vector<int> labels,
                                   const std::vector<std::pair<int, int>>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int index) const { return labels_[index]; }
  /// -1 when the label is unknown.
  int index_of(int label) const;
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  bool has_edge(int u, int v) const;

  /// Connected components, each a sorted list of vertex indices; ordered by
  /// their smallest member.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of(int vertex) const { return component_of_[vertex]; }

  friend bool operator==(const LabelledGraph& a, const LabelledGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<int> labels_;
  std::unordered_map<int, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_;
};

/// One straight-line realization of a labelled graph.
struct PlanarDrawing {
  std::shared_ptr<const LabelledGraph> graph;
  std::vector<Point2> position;  // indexed by vertex index
  std::string name;

  const Point2& at(int vertex) const { return position[vertex]; }
  Segment edge_segment(const LabelledGraph::Edge& e) const {
    return {position[e.first], position[e.second]};
  }
};

/// A problem instance: one graph and k drawings of it.
struct Instance {
  std::shared_ptr<const LabelledGraph> graph;
  std::vector<PlanarDrawing> drawings;
};

struct Violation {
  enum class Kind { duplicate_position, edge_edge, vertex_on_edge };
  Kind kind;
  Interaction interaction = Interaction::disjoint;
  // Labels: for edge_edge (a-b, c-d); vertex_on_edge (a, c-d);
  // duplicate_position (a, b).
  int a = 0, b = 0, c = 0, d = 0;

  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks that positions are pairwise distinct, no two edges cross or
/// overlap and no vertex lies inside an edge. Lists every violating pair.
ValidationReport validate_planar(const PlanarDrawing& drawing);

}  // namespace compaug
