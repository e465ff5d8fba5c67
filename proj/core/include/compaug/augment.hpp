// Compatible connectivity augmentation of k isomorphic drawings: every
// region is connected by a path visiting its components in an order chosen
// from the drawings' cost tables, realized with equal vertex counts.
#pragma once

#include "compaug/chain.hpp"
#include "compaug/graph.hpp"
#include "compaug/linf_path.hpp"
#include "compaug/route.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace compaug {

struct AugmentError : std::runtime_error {
  enum class Kind { invalid_input, internal };
  Kind kind;
  AugmentError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

/// One connected region (the outer face or a bounded face with holes).
struct RegionPlan {
  int face = 0;                      // face index in the first drawing
  std::vector<int> components;       // participants' component ids, base first
  std::vector<int> order;            // participant indices in visiting order
  std::vector<GridPoint> points;     // per participant: ranks in every drawing
  std::vector<Scalar> distance;      // per hop: max-norm gap of consecutive points
  std::vector<std::size_t> budget;   // per hop: subdivision vertices in every drawing
  std::vector<std::vector<std::size_t>> realized;  // [drawing][hop] before padding
  std::vector<int> rounds;           // per drawing: route refinement rounds
};

struct CompatibleResult {
  std::shared_ptr<const LabelledGraph> graph;  // the augmented graph
  std::vector<PlanarDrawing> drawings;
  std::vector<int> added_labels;
  std::vector<std::pair<int, int>> added_edges;  // labels
  std::vector<RegionPlan> regions;
  Chain chain;                                   // every hop, all drawings
  int components = 0;                            // r of the input

  std::size_t added_vertex_count() const { return added_labels.size(); }
  std::size_t added_edge_count() const { return added_edges.size(); }
  /// added vertices / (n r^(1 - 1/k)); zero when nothing was added.
  double envelope_constant() const;
};

struct AugmentOptions {
  bool check_invariants = false;  // per-hop clearance checks in every router
  bool validate_result = true;    // rerun planarity, superset, isomorphism, connectivity
};

/// Throws AugmentError: invalid_input for a drawing that is not planar or
/// drawings that are not isomorphic, internal when a router or the final
/// checks fail.
CompatibleResult compatible_augment(const Instance& instance, const AugmentOptions& options = {});

/// Checks a result against its input. Empty when everything holds, else the
/// first failure.
std::string verify_result(const Instance& instance, const CompatibleResult& result);

/// Ranks of every participant in every drawing, one point per participant.
std::vector<GridPoint> embed_components(std::span<const CostTable> tables);

/// max-norm path through the points (greedy tree preorder, then 2-opt),
/// starting at the end that holds the
/// base (label 0), else at the end with the smaller label.
std::vector<int> visiting_order(std::span<const GridPoint> points);

}  // namespace compaug
