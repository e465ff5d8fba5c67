#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace testgen {

using compaug::Point2;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::vector<Point2> distinct_points(Rng& rng, int count, long side) {
  std::set<std::pair<long, long>> seen;
  std::vector<Point2> out;
  while (static_cast<int>(out.size()) < count) {
    long x = uniform(rng, 0, side), y = uniform(rng, 0, side);
    if (seen.insert({x, y}).second) out.emplace_back(x, y);
  }
  return out;
}

std::vector<Point2> general_points(Rng& rng, int count, long side) {
  std::set<long> xs, ys;
  std::vector<Point2> out;
  while (static_cast<int>(out.size()) < count) {
    long x = uniform(rng, 0, side), y = uniform(rng, 0, side);
    if (xs.count(x) || ys.count(y)) continue;
    xs.insert(x);
    ys.insert(y);
    out.emplace_back(x, y);
  }
  return out;
}

std::vector<compaug::GridPoint> grid_points(Rng& rng, int count, int dim, long side) {
  std::vector<compaug::GridPoint> out(count);
  for (int i = 0; i < count; ++i) {
    out[i].label = i;
    for (int d = 0; d < dim; ++d) out[i].coords.emplace_back(uniform(rng, 0, side));
  }
  return out;
}

std::vector<int> permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

compaug::Segment small_segment(Rng& rng, long side) {
  Point2 a(uniform(rng, 0, side), uniform(rng, 0, side));
  Point2 b = a;
  while (b == a) b = Point2(uniform(rng, 0, side), uniform(rng, 0, side));
  return {a, b};
}

compaug::Instance make_instance(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges,
                                const std::vector<std::vector<Point2>>& positions) {
  compaug::Instance in;
  // positions follow `labels`; the graph indexes vertices by sorted label.
  in.graph = std::make_shared<const compaug::LabelledGraph>(compaug::LabelledGraph::from_labels(labels, edges));
  int i = 0;
  for (const auto& pos : positions) {
    compaug::PlanarDrawing d;
    d.graph = in.graph;
    d.name = "d" + std::to_string(i++);
    d.position.resize(labels.size());
    for (std::size_t j = 0; j < labels.size(); ++j) d.position[in.graph->index_of(labels[j])] = pos[j];
    in.drawings.push_back(std::move(d));
  }
  return in;
}

compaug::Instance translated_copies(const compaug::PlanarDrawing& d, int k, Rng& rng) {
  compaug::Instance in;
  in.graph = d.graph;
  for (int i = 0; i < k; ++i) {
    compaug::PlanarDrawing c = d;
    const Point2 shift(uniform(rng, -50, 50), uniform(rng, -50, 50));
    const compaug::Scalar scale(uniform(rng, 1, 7), uniform(rng, 1, 7));
    for (auto& p : c.position) p = scale * p + shift;
    c.name = "copy" + std::to_string(i);
    in.drawings.push_back(std::move(c));
  }
  return in;
}

compaug::Instance point_instance(Rng& rng, int n, int k, long side) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::vector<Point2>> pos;
  for (int i = 0; i < k; ++i) pos.push_back(general_points(rng, n, side));
  return make_instance(labels, {}, pos);
}

compaug::PlanarDrawing mirrored(const compaug::PlanarDrawing& d) {
  compaug::PlanarDrawing m = d;
  for (auto& p : m.position) p.x = -p.x;
  return m;
}

}  // namespace testgen

namespace testgen {

compaug::PlanarDrawing greedy_planar(Rng& rng, int n, long side, int density) {
  auto pts = distinct_points(rng, n, side);
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> used;
  for (int it = 0; it < density * n; ++it) {
    int a = static_cast<int>(uniform(rng, 0, n - 1)), b = static_cast<int>(uniform(rng, 0, n - 1));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (used.count({a, b})) continue;
    const compaug::Segment s{pts[a], pts[b]};
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = !compaug::point_in_open_segment(pts[v], s);
    for (const auto& [c, d] : edges) {
      if (!ok) break;
      ok = !compaug::is_forbidden(compaug::segments_properly_interact(s, {pts[c], pts[d]}));
    }
    if (!ok) continue;
    used.insert({a, b});
    edges.emplace_back(a, b);
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return make_instance(labels, edges, {pts}).drawings[0];
}

}  // namespace testgen
