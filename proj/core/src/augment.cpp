#include "compaug/augment.hpp"

#include "compaug/point_augment.hpp"

#include <algorithm>
#include <cmath>

namespace compaug {

double CompatibleResult::envelope_constant() const {
  if (added_labels.empty() || drawings.empty()) return 0.0;
  const double n = static_cast<double>(graph->vertex_count() - added_labels.size());
  const double k = static_cast<double>(drawings.size());
  const double r = std::max(components, 1);
  return static_cast<double>(added_labels.size()) / (n * std::pow(r, 1.0 - 1.0 / k));
}

std::vector<GridPoint> embed_components(std::span<const CostTable> tables) {
  std::vector<GridPoint> points;
  if (tables.empty()) return points;
  const std::size_t r = tables[0].rank.size();
  for (std::size_t p = 0; p < r; ++p) {
    GridPoint x;
    x.label = static_cast<int>(p);
    for (const auto& t : tables) x.coords.emplace_back(t.rank.at(p));
    points.push_back(std::move(x));
  }
  return points;
}

std::vector<int> visiting_order(std::span<const GridPoint> points) {
  if (points.size() == 1) return {points[0].label};
  std::vector<int> order = improve_path(spanning_path(points), points).order;
  if (order.front() != 0 && (order.back() == 0 || order.back() < order.front())) {
    std::reverse(order.begin(), order.end());
  }
  return order;
}

namespace {

using Kind = AugmentError::Kind;

CompatibleResult assemble(const Instance& in, const Chain& chain,
                          const std::vector<std::pair<int, int>>& direct) {
  const LabelledGraph& g = *in.graph;
  CompatibleResult res;
  std::vector<int> labels = g.labels();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
  std::vector<std::vector<Point2>> position;
  for (const auto& d : in.drawings) position.push_back(d.position);
  int next = labels.empty() ? 0 : labels.back() + 1;

  for (const auto& [a, b] : direct) {
    res.added_edges.emplace_back(g.label(a), g.label(b));
  }
  for (const auto& hop : chain.hops) {
    const std::size_t b = hop.budget();
    int prev = g.label(hop.from);
    for (std::size_t s = 0; s < b; ++s) {
      const int v = next++;
      labels.push_back(v);
      res.added_labels.push_back(v);
      for (std::size_t i = 0; i < position.size(); ++i) position[i].push_back(hop.interior[i][s]);
      res.added_edges.emplace_back(prev, v);
      prev = v;
    }
    res.added_edges.emplace_back(prev, g.label(hop.to));
  }
  edges.insert(edges.end(), res.added_edges.begin(), res.added_edges.end());

  // Fresh labels exceed every old one, so sorted order keeps the positions aligned.
  try {
    res.graph = std::make_shared<LabelledGraph>(LabelledGraph::from_labels(labels, edges));
  } catch (const std::invalid_argument& e) {
    throw AugmentError(Kind::internal, std::string("augmented graph: ") + e.what());
  }
  for (std::size_t i = 0; i < in.drawings.size(); ++i) {
    PlanarDrawing h;
    h.graph = res.graph;
    h.position = std::move(position[i]);
    h.name = in.drawings[i].name;
    res.drawings.push_back(std::move(h));
  }
  res.chain = chain;
  res.components = static_cast<int>(g.components().size());
  return res;
}

void check_input(const Instance& in) {
  if (!in.graph) throw AugmentError(Kind::invalid_input, "instance has no graph");
  if (in.drawings.empty()) throw AugmentError(Kind::invalid_input, "instance has no drawings");
  for (std::size_t i = 0; i < in.drawings.size(); ++i) {
    const auto& d = in.drawings[i];
    if (!d.graph || !(*d.graph == *in.graph) || d.position.size() != in.graph->vertex_count()) {
      throw AugmentError(Kind::invalid_input, "drawing " + std::to_string(i) + " does not match the graph");
    }
    auto report = validate_planar(d);
    if (!report.ok()) {
      throw AugmentError(Kind::invalid_input, "drawing " + std::to_string(i) + ": " + report.describe());
    }
  }
  for (std::size_t i = 1; i < in.drawings.size(); ++i) {
    if (auto why = isomorphism_mismatch(in.drawings[0], in.drawings[i])) {
      throw AugmentError(Kind::invalid_input, "drawings 0 and " + std::to_string(i) + " differ: " + *why);
    }
  }
}

std::vector<int> components_of(const Region& region) {
  std::vector<int> out;
  for (const auto& p : region.participants) out.push_back(p.component);
  return out;
}

// The same region in every drawing, matched through the enclosing walk.
std::vector<Region> matching_regions(const Instance& in, const std::vector<Embedding>& emb,
                                     int face) {
  std::vector<Region> regions;
  const auto& f0 = emb[0].faces;
  for (std::size_t i = 0; i < in.drawings.size(); ++i) {
    if (face == f0.outer_face) {
      regions.push_back(outer_region(in.drawings[i], emb[i]));
      continue;
    }
    const auto& walk = f0.cycles[f0.faces[face].enclosing_cycle].walk;
    int fi = face_with_dart(emb[i], walk[0], walk[1]);
    if (fi < 0) {
      throw AugmentError(Kind::internal, "face " + std::to_string(face) + " has no match in drawing " +
                                             std::to_string(i));
    }
    regions.push_back(face_region(in.drawings[i], emb[i], fi));
  }
  for (std::size_t i = 1; i < regions.size(); ++i) {
    if (components_of(regions[i]) != components_of(regions[0])) {
      throw AugmentError(Kind::internal, "face " + std::to_string(face) + " holds other components in drawing " +
                                             std::to_string(i));
    }
  }
  return regions;
}

void connect_region(const Instance& in, const std::vector<Region>& regions, const AugmentOptions& opt,
                    Chain& chain, RegionPlan& plan) {
  const LabelledGraph& g = *in.graph;
  const std::size_t k = in.drawings.size();
  const std::size_t r = regions[0].participants.size();
  std::vector<ConnectedAugmentation> ca;
  std::vector<std::vector<Corner>> att(k);
  std::vector<CostTable> tables;
  for (std::size_t i = 0; i < k; ++i) {
    ca.push_back(connect_components(in.drawings[i], regions[i]));
    for (const auto& p : regions[i].participants) att[i].push_back(attachment_corner(p, g));
    tables.push_back(cost_table(regions[i], ca[i], att[i], g));
  }
  plan.points = embed_components(tables);
  plan.order = visiting_order(plan.points);

  std::vector<Route> routes;
  for (std::size_t i = 0; i < k; ++i) {
    RouteOptions ro;
    ro.check_invariants = opt.check_invariants;
    try {
      routes.push_back(draw_route(in.drawings[i], regions[i], ca[i], tables[i], att[i], plan.order, ro));
    } catch (const RouteError& e) {
      throw AugmentError(Kind::internal, "drawing " + std::to_string(i) + ": " + e.what());
    }
    plan.rounds.push_back(routes.back().rounds);
  }

  plan.realized.assign(k, {});
  for (std::size_t j = 0; j + 1 < r; ++j) {
    const int p = plan.order[j], q = plan.order[j + 1];
    Hop hop;
    hop.from = att[0][p].vertex;
    hop.to = att[0][q].vertex;
    for (std::size_t i = 0; i < k; ++i) {
      if (att[i][p].vertex != hop.from || att[i][q].vertex != hop.to) {
        throw AugmentError(Kind::internal, "attachment corners differ between drawings");
      }
      const auto& pts = routes[i].points;
      hop.interior.emplace_back(pts.begin() + routes[i].site[j] + 1, pts.begin() + routes[i].site[j + 1]);
      plan.realized[i].push_back(hop.interior.back().size());
    }
    const std::size_t b = hop.budget();
    for (std::size_t i = 0; i < k; ++i) {
      hop.interior[i] = pad_hop(in.drawings[i].position[hop.from], hop.interior[i],
                                in.drawings[i].position[hop.to], b);
    }
    plan.budget.push_back(b);
    plan.distance.push_back(linf_distance(plan.points[p], plan.points[q]));
    chain.hops.push_back(std::move(hop));
  }
}

}  // namespace

CompatibleResult compatible_augment(const Instance& in, const AugmentOptions& opt) {
  check_input(in);
  const LabelledGraph& g = *in.graph;
  const std::size_t r = g.components().size();
  if (r <= 1) return assemble(in, {}, {});

  if (g.edge_count() == 0) {
    OrderedPathOptions po;
    po.check_invariants = opt.check_invariants;
    PointAugmentation pa = augment_points(in, po);
    CompatibleResult res = assemble(in, pa.chain, {});
    RegionPlan plan;
    for (int v : pa.order) plan.components.push_back(g.component_of(v));
    for (std::size_t j = 0; j < pa.order.size(); ++j) plan.order.push_back(static_cast<int>(j));
    plan.distance = pa.hop_distance;
    for (const auto& hop : pa.chain.hops) plan.budget.push_back(hop.budget());
    res.regions.push_back(std::move(plan));
    if (opt.validate_result) {
      if (auto why = verify_result(in, res); !why.empty()) throw AugmentError(Kind::internal, why);
    }
    return res;
  }

  std::vector<Embedding> emb;
  for (const auto& d : in.drawings) emb.push_back(derive_embedding(d));

  std::vector<int> faces;
  const auto& fs = emb[0].faces;
  if (fs.faces[fs.outer_face].components.size() > 1) faces.push_back(fs.outer_face);
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (static_cast<int>(f) != fs.outer_face && !fs.faces[f].components.empty()) {
      faces.push_back(static_cast<int>(f));
    }
  }

  Chain chain;
  std::vector<std::pair<int, int>> direct;
  std::vector<RegionPlan> plans;
  for (int f : faces) {
    auto regions = matching_regions(in, emb, f);
    RegionPlan plan;
    plan.face = f;
    plan.components = components_of(regions[0]);
    if (in.drawings.size() == 1) {
      auto ca = connect_components(in.drawings[0], regions[0]);
      direct.insert(direct.end(), ca.extra_edges.begin(), ca.extra_edges.end());
    } else {
      connect_region(in, regions, opt, chain, plan);
    }
    plans.push_back(std::move(plan));
  }

  CompatibleResult res = assemble(in, chain, direct);
  res.regions = std::move(plans);
  if (opt.validate_result) {
    if (auto why = verify_result(in, res); !why.empty()) throw AugmentError(Kind::internal, why);
  }
  return res;
}

std::string verify_result(const Instance& in, const CompatibleResult& res) {
  const LabelledGraph& g = *in.graph;
  if (res.drawings.size() != in.drawings.size()) return "drawing count changed";
  const LabelledGraph& h = *res.graph;
  for (std::size_t i = 0; i < res.drawings.size(); ++i) {
    const auto& hd = res.drawings[i];
    auto report = validate_planar(hd);
    if (!report.ok()) return "result " + std::to_string(i) + " not planar: " + report.describe();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      int hv = h.index_of(g.label(static_cast<int>(v)));
      if (hv < 0 || !(hd.position[hv] == in.drawings[i].position[v])) {
        return "result " + std::to_string(i) + " moved or lost vertex " + std::to_string(g.label(static_cast<int>(v)));
      }
    }
  }
  for (const auto& [a, b] : g.edges()) {
    if (!h.has_edge(h.index_of(g.label(a)), h.index_of(g.label(b)))) return "result lost an input edge";
  }
  for (std::size_t i = 1; i < res.drawings.size(); ++i) {
    if (auto why = isomorphism_mismatch(res.drawings[0], res.drawings[i])) {
      return "results 0 and " + std::to_string(i) + " differ: " + *why;
    }
  }
  if (h.components().size() > 1) return "result is not connected";
  return {};
}

}  // namespace compaug
