#include "compaug/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace compaug {

LabelledGraph LabelledGraph::from_labels(std::vector<int> labels,
                                         const std::vector<std::pair<int, int>>& edges) {
  LabelledGraph g;
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
    throw std::invalid_argument("duplicate vertex label");
  }
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < g.labels_.size(); ++i) g.index_[g.labels_[i]] = static_cast<int>(i);

  for (const auto& [lu, lv] : edges) {
    int u = g.index_of(lu), v = g.index_of(lv);
    if (u < 0 || v < 0) {
      throw std::invalid_argument("edge references unknown vertex " +
                                  std::to_string(u < 0 ? lu : lv));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(lu));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto it = std::adjacent_find(g.edges_.begin(), g.edges_.end()); it != g.edges_.end()) {
    throw std::invalid_argument("parallel edge " + std::to_string(g.labels_[it->first]) + "-" +
                                std::to_string(g.labels_[it->second]));
  }

  g.adjacency_.assign(g.labels_.size(), {});
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }

  // Components by union-find; ordered by smallest member.
  std::vector<int> parent(g.labels_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : g.edges_) parent[find(u)] = find(v);
  g.component_of_.assign(g.labels_.size(), -1);
  std::vector<int> comp_of_root(g.labels_.size(), -1);
  for (std::size_t v = 0; v < g.labels_.size(); ++v) {
    int root = find(static_cast<int>(v));
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<int>(g.components_.size());
      g.components_.emplace_back();
    }
    g.component_of_[v] = comp_of_root[root];
    g.components_[comp_of_root[root]].push_back(static_cast<int>(v));
  }
  return g;
}

int LabelledGraph::index_of(int label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

bool LabelledGraph::has_edge(int u, int v) const {
  const auto& adj = adjacency_[u];
  return std::find(adj.begin(), adj.end(), v) != adj.end();
}

std::string Violation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::duplicate_position:
      os << "vertices " << a << " and " << b << " share a position";
      break;
    case Kind::edge_edge:
      os << "edges " << a << "-" << b << " and " << c << "-" << d << ": " << to_string(interaction);
      break;
    case Kind::vertex_on_edge:
      os << "vertex " << a << " lies inside edge " << c << "-" << d;
      break;
  }
  return os.str();
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) os << "\n  " << v.describe();
  return os.str();
}

ValidationReport validate_planar(const PlanarDrawing& drawing) {
  const LabelledGraph& g = *drawing.graph;
  ValidationReport report;
  if (drawing.position.size() != g.vertex_count()) {
    throw std::invalid_argument("drawing does not position every vertex");
  }

  const std::size_t nv = g.vertex_count();
  const auto& edges = g.edges();
  // Items 0..E-1 are edges, E..E+V-1 are vertices.
  const int ne = static_cast<int>(edges.size());
  std::vector<ApproxPoint> ap;
  ap.reserve(nv);
  for (const auto& p : drawing.position) ap.push_back(approx_refined(p));
  // Rounding to double is monotone, so exact overlaps survive in these
  // boxes without padding.
  std::vector<Box> boxes;
  boxes.reserve(edges.size() + nv);
  for (const auto& [u, w] : edges) {
    boxes.push_back({std::min(ap[u].x, ap[w].x), std::min(ap[u].y, ap[w].y),
                     std::max(ap[u].x, ap[w].x), std::max(ap[u].y, ap[w].y)});
  }
  for (const auto& a : ap) boxes.push_back({a.x, a.y, a.x, a.y});

  for_each_box_overlap(std::span<const Box>(boxes), [&](int i, int j) {
    if (i < ne && j < ne) {
      // Edges at a common vertex can only overlap, which needs collinearity.
      const auto& [a0, a1] = edges[i];
      const auto& [b0, b1] = edges[j];
      const int shared = (a0 == b0 || a0 == b1) ? a0 : ((a1 == b0 || a1 == b1) ? a1 : -1);
      if (shared >= 0) {
        const int p = shared == a0 ? a1 : a0, q = shared == b0 ? b1 : b0;
        if (orient_filtered(ap[shared], ap[p], ap[q]) != 0) return;
        // Collinear but on opposite sides of the shared vertex.
        for (bool use_x : {true, false}) {
          const int cp = compare_filtered(ap[p], ap[shared], use_x);
          const int cq = compare_filtered(ap[q], ap[shared], use_x);
          if (cp != 0 && cq != 0 && cp != cq) return;
        }
      }
      const ApproxPoint a[4] = {ap[edges[i].first], ap[edges[i].second], ap[edges[j].first],
                                ap[edges[j].second]};
      auto filtered = segments_interact_filtered(a);
      auto kind = filtered ? *filtered
                           : segments_properly_interact(drawing.edge_segment(edges[i]),
                                                        drawing.edge_segment(edges[j]));
      if (is_forbidden(kind)) {
        Violation v{Violation::Kind::edge_edge, kind};
        v.a = g.label(edges[i].first);
        v.b = g.label(edges[i].second);
        v.c = g.label(edges[j].first);
        v.d = g.label(edges[j].second);
        report.violations.push_back(v);
      }
    } else if (i < ne) {
      int vert = j - ne;
      const auto& e = edges[i];
      if (vert != e.first && vert != e.second &&
          orient_filtered(ap[e.first], ap[e.second], ap[vert]) == 0 &&
          !outside_box_filtered(ap[vert], ap[e.first], ap[e.second]) &&
          point_in_open_segment(drawing.position[vert], drawing.edge_segment(e))) {
        Violation v{Violation::Kind::vertex_on_edge};
        v.a = g.label(vert);
        v.c = g.label(e.first);
        v.d = g.label(e.second);
        report.violations.push_back(v);
      }
    } else {
      int u = i - ne, w = j - ne;
      if (drawing.position[u] == drawing.position[w]) {
        Violation v{Violation::Kind::duplicate_position};
        v.a = g.label(u);
        v.b = g.label(w);
        report.violations.push_back(v);
      }
    }
  });
  return report;
}

}  // namespace compaug
