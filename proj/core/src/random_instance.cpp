#include "compaug/random_instance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace compaug {

namespace {

struct Gadget {
  std::vector<std::pair<long, long>> points;
  std::vector<std::pair<int, int>> edges;  // local indices
  long side = 1;
};

// Fan around the leftmost point: spokes to every other point, and a random
// subset of rim edges between angularly consecutive points. Sometimes a
// path along the rim instead.
Gadget fan(int m, std::mt19937_64& rng) {
  Gadget g;
  g.side = 2L * m + 2;
  std::uniform_int_distribution<long> coord(0, g.side - 1), xs(1, g.side - 1);
  const long y0 = coord(rng);
  g.points.emplace_back(0, y0);
  std::set<std::pair<long, long>> directions;
  while (static_cast<int>(g.points.size()) < m) {
    long x = xs(rng), y = coord(rng);
    long dy = y - y0, d = std::gcd(x, std::abs(dy));
    if (!directions.insert({x / d, dy / d}).second) continue;
    g.points.emplace_back(x, y);
  }
  std::sort(g.points.begin() + 1, g.points.end(), [&](const auto& a, const auto& b) {
    return (a.second - y0) * b.first < (b.second - y0) * a.first;
  });
  const bool path = std::bernoulli_distribution(0.25)(rng);
  std::bernoulli_distribution rim(0.5);
  for (int i = 1; i < m; ++i) {
    if (!path || i == 1) g.edges.emplace_back(0, i);
    if (i + 1 < m && (path || rim(rng))) g.edges.emplace_back(i, i + 1);
  }
  return g;
}

std::vector<int> split(int n, int parts, int first_min, std::mt19937_64& rng) {
  std::vector<int> sizes(parts, 1);
  sizes[0] = first_min;
  int left = n - first_min - (parts - 1);
  std::uniform_int_distribution<int> pick(0, parts - 1);
  while (left-- > 0) ++sizes[pick(rng)];
  return sizes;
}

}  // namespace

Instance random_instance(const RandomInstanceOptions& o) {
  if (o.k < 1 || o.r < 1 || o.n < o.r) throw std::invalid_argument("random_instance: need 1 <= r <= n, k >= 1");
  if (o.framed && (o.r < 2 || o.n < o.r + 3)) {
    throw std::invalid_argument("random_instance: a frame needs r >= 2 and n >= r + 3");
  }
  std::mt19937_64 rng(o.seed);
  const auto sizes = split(o.n, o.r, o.framed ? 4 : 1, rng);
  const int first_gadget = o.framed ? 1 : 0;
  std::vector<Gadget> gadgets(o.r);
  long side = 1;
  for (int c = first_gadget; c < o.r; ++c) {
    gadgets[c] = fan(sizes[c], rng);
    side = std::max(side, gadgets[c].side);
  }
  const long cell = 5 * side + 4;

  // Cells: outside the frame on the left, inside it on the right.
  const int inner = o.framed ? (o.r - 1) / 2 : 0;
  const int outer = o.r - first_gadget - inner;
  const int cols_out = std::max(1, static_cast<int>(std::ceil(std::sqrt(outer))));
  const int cols_in = std::max(1, static_cast<int>(std::ceil(std::sqrt(inner))));
  const int rows_in = std::max(1, (inner + cols_in - 1) / cols_in);
  const long x0 = (cols_out + 1) * cell, y0 = cell;

  // Global vertex numbering: component by component.
  std::vector<int> offset(o.r + 1, 0);
  for (int c = 0; c < o.r; ++c) offset[c + 1] = offset[c] + sizes[c];
  std::vector<int> labels(o.n);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);

  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<long, long>> frame;
  if (o.framed) {
    const long left = x0 - 2, right = x0 + cols_in * cell + 2, bottom = y0 - 2, top = y0 + rows_in * cell + 2;
    frame = {{left, bottom}};
    // Extra frame vertices subdivide the bottom side.
    for (int s = 1; s <= sizes[0] - 4; ++s) frame.emplace_back(left + s, bottom);
    frame.insert(frame.end(), {{right, bottom}, {right, top}, {left, top}});
    for (int s = 0; s < sizes[0]; ++s) edges.emplace_back(labels[s], labels[(s + 1) % sizes[0]]);
  }
  for (int c = first_gadget; c < o.r; ++c) {
    for (const auto& [a, b] : gadgets[c].edges) edges.emplace_back(labels[offset[c] + a], labels[offset[c] + b]);
  }
  auto graph = std::make_shared<const LabelledGraph>(LabelledGraph::from_labels(labels, edges));

  Instance in;
  in.graph = graph;
  std::uniform_int_distribution<long> stretch(1, 3), shear(0, 2);
  for (int i = 0; i < o.k; ++i) {
    std::vector<int> out_cells(outer), in_cells(inner);
    std::iota(out_cells.begin(), out_cells.end(), 0);
    std::iota(in_cells.begin(), in_cells.end(), 0);
    std::shuffle(out_cells.begin(), out_cells.end(), rng);
    std::shuffle(in_cells.begin(), in_cells.end(), rng);

    PlanarDrawing d;
    d.graph = graph;
    d.position.resize(o.n);
    d.name = "drawing " + std::to_string(i);
    for (int s = 0; s < static_cast<int>(frame.size()); ++s) {
      d.position[graph->index_of(labels[s])] = Point2(frame[s].first, frame[s].second);
    }
    for (int c = first_gadget; c < o.r; ++c) {
      const int slot = c - first_gadget;
      long ox, oy;
      if (slot < inner) {
        ox = x0 + (in_cells[slot] % cols_in) * cell;
        oy = y0 + (in_cells[slot] / cols_in) * cell;
      } else {
        const int cell_id = out_cells[slot - inner];
        ox = (cell_id % cols_out) * cell;
        oy = (cell_id / cols_out) * cell;
      }
      // Orientation-preserving shear keeps every rotation.
      const long a = stretch(rng), b = shear(rng), e = stretch(rng);
      const auto& pts = gadgets[c].points;
      for (std::size_t v = 0; v < pts.size(); ++v) {
        const auto [x, y] = pts[v];
        d.position[graph->index_of(labels[offset[c] + static_cast<int>(v)])] =
            Point2(ox + a * x + b * y, oy + e * y);
      }
    }
    in.drawings.push_back(std::move(d));
  }
  return in;
}

}  // namespace compaug
