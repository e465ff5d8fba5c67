// Short spanning paths of point sets under the max-coordinate metric.
#pragma once

#include "compaug/geometry.hpp"

#include <span>
#include <utility>
#include <vector>

namespace compaug {

struct GridPoint {
  std::vector<Scalar> coords;
  int label = 0;
};

struct SpanningPath {
  std::vector<int> order;           // point labels in path order
  std::vector<Scalar> hop_lengths;  // order.size() - 1 entries

  Scalar total() const;
};

/// Throws std::invalid_argument on a dimension mismatch.
Scalar linf_distance(const GridPoint& a, const GridPoint& b);

/// Repeatedly joins the closest remaining pair and retires the endpoint with
/// the smaller label. Ties go to the lexicographically smallest label pair.
/// Edges are index pairs into `points`.
std::vector<std::pair<int, int>> greedy_spanning_tree(std::span<const GridPoint> points);

/// Preorder of the tree rooted at the smallest label, children by label.
SpanningPath tree_to_path(const std::vector<std::pair<int, int>>& tree,
                          std::span<const GridPoint> points);

SpanningPath spanning_path(std::span<const GridPoint> points);

/// 2-opt on an open path: reverses stretches while that shortens it. Never
/// longer than the input.
SpanningPath improve_path(const SpanningPath& path, std::span<const GridPoint> points);

/// Optimal open path by subset dynamic programming. Intended for tests;
/// throws std::invalid_argument above 12 points.
SpanningPath exhaustive_shortest_path(std::span<const GridPoint> points);

Scalar tree_length(const std::vector<std::pair<int, int>>& tree,
                   std::span<const GridPoint> points);

}  // namespace compaug
