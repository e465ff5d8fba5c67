#include "compaug/boundary_cost.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace compaug {

namespace {

Participant make_participant(const Embedding& emb, int cycle, bool enclosing) {
  Participant p;
  p.facing = emb.faces.cycles[cycle];
  p.component = p.facing.component;
  p.enclosing = enclosing;
  return p;
}

std::vector<int> walk_vertices(const BoundaryCycle& c) {
  std::vector<int> vs(c.walk.begin(), c.walk.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Point2 linf_unit(const Point2& v) {
  Scalar n = linf_norm(v);
  return {v.x / n, v.y / n};
}

}  // namespace

Region outer_region(const PlanarDrawing&, const Embedding& emb) {
  Region r;
  r.face = emb.faces.outer_face;
  for (int c : emb.faces.faces[r.face].components) {
    r.participants.push_back(make_participant(emb, emb.faces.outer_cycle_of_component[c], false));
  }
  std::sort(r.participants.begin(), r.participants.end(),
            [](const Participant& a, const Participant& b) { return a.component < b.component; });
  return r;
}

Region face_region(const PlanarDrawing&, const Embedding& emb, int face) {
  const Face& f = emb.faces.faces.at(face);
  if (f.enclosing_cycle < 0) throw std::invalid_argument("face_region: unbounded face");
  Region r;
  r.face = face;
  r.participants.push_back(make_participant(emb, f.enclosing_cycle, true));
  std::vector<int> comps = f.components;
  std::sort(comps.begin(), comps.end());
  for (int c : comps) {
    r.participants.push_back(make_participant(emb, emb.faces.outer_cycle_of_component[c], false));
  }
  return r;
}

int face_with_dart(const Embedding& emb, int u, int v) {
  for (std::size_t f = 1; f < emb.faces.faces.size(); ++f) {
    const auto& walk = emb.faces.cycles[emb.faces.faces[f].enclosing_cycle].walk;
    const std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (walk[i] == u && walk[(i + 1) % n] == v) return static_cast<int>(f);
    }
  }
  return -1;
}

ConnectedAugmentation connect_components(const PlanarDrawing& drawing, const Region& region) {
  const auto& pos = drawing.position;
  const LabelledGraph& g = *drawing.graph;
  ConnectedAugmentation out;
  const std::size_t parts = region.participants.size();
  if (parts == 0) throw std::invalid_argument("connect_components: empty region");

  // Obstacles: every facing edge once, and every facing vertex.
  std::set<std::pair<int, int>> edge_set;
  std::vector<int> all_vertices;
  std::vector<std::vector<int>> part_vertices(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    const auto& c = region.participants[p].facing;
    part_vertices[p] = walk_vertices(c);
    all_vertices.insert(all_vertices.end(), part_vertices[p].begin(), part_vertices[p].end());
    if (c.isolated) continue;
    for (std::size_t i = 0; i < c.walk.size(); ++i) {
      int a = c.walk[i], b = c.walk[(i + 1) % c.walk.size()];
      edge_set.emplace(std::min(a, b), std::max(a, b));
    }
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  std::vector<Segment> obstacle;
  std::vector<Box> obstacle_box;
  for (auto [a, b] : edges) {
    obstacle.push_back({pos[a], pos[b]});
    obstacle_box.push_back(bounding_box(obstacle.back()));
  }
  std::vector<Box> vertex_box;
  for (int v : all_vertices) vertex_box.push_back(bounding_box(pos[v]));

  auto visible = [&](int v, int u) {
    Segment s{pos[v], pos[u]};
    Box sb = bounding_box(s);
    for (std::size_t i = 0; i < obstacle.size(); ++i) {
      if (!sb.overlaps(obstacle_box[i])) continue;
      auto kind = segments_properly_interact(s, obstacle[i]);
      if (kind != Interaction::disjoint && kind != Interaction::share_endpoint_only) return false;
    }
    for (std::size_t i = 0; i < all_vertices.size(); ++i) {
      if (!sb.overlaps(vertex_box[i])) continue;
      if (point_in_open_segment(pos[all_vertices[i]], s)) return false;
    }
    return true;
  };

  std::vector<int> leftmost(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    leftmost[p] = *std::min_element(part_vertices[p].begin(), part_vertices[p].end(),
                                    [&](int a, int b) { return pos[a] < pos[b]; });
  }
  std::vector<std::size_t> sweep(parts);
  for (std::size_t p = 0; p < parts; ++p) sweep[p] = p;
  std::sort(sweep.begin(), sweep.end(),
            [&](std::size_t a, std::size_t b) { return pos[leftmost[a]] < pos[leftmost[b]]; });

  std::vector<int> connected = part_vertices[sweep[0]];
  for (std::size_t s = 1; s < parts; ++s) {
    const int v = leftmost[sweep[s]];
    auto nearest_first = [&](std::vector<int> cands) {
      std::sort(cands.begin(), cands.end(), [&](int a, int b) {
        Scalar da = squared_distance(pos[v], pos[a]), db = squared_distance(pos[v], pos[b]);
        if (da != db) return da < db;
        return g.label(a) < g.label(b);
      });
      return cands;
    };
    std::vector<int> left_of_v;
    for (int u : connected) {
      if (pos[u] < pos[v]) left_of_v.push_back(u);
    }
    int found = -1;
    for (int u : nearest_first(left_of_v)) {
      if (visible(v, u)) {
        found = u;
        break;
      }
    }
    if (found < 0) {
      for (int u : nearest_first(connected)) {
        if (visible(v, u)) {
          found = u;
          break;
        }
      }
    }
    if (found < 0) {
      throw std::logic_error("connect_components: no visible vertex for " +
                             std::to_string(g.label(v)));
    }
    out.extra_edges.emplace_back(std::min(v, found), std::max(v, found));
    obstacle.push_back({pos[v], pos[found]});
    obstacle_box.push_back(bounding_box(obstacle.back()));
    connected.insert(connected.end(), part_vertices[sweep[s]].begin(),
                     part_vertices[sweep[s]].end());
  }

  // Rotation of the facing edges plus the new edges.
  out.rotation.ccw.assign(g.vertex_count(), {});
  auto add = [&](int a, int b) {
    out.rotation.ccw[a].push_back(b);
    out.rotation.ccw[b].push_back(a);
  };
  for (auto [a, b] : edges) add(a, b);
  for (auto [a, b] : out.extra_edges) add(a, b);
  for (int v : all_vertices) {
    auto& ring = out.rotation.ccw[v];
    std::sort(ring.begin(), ring.end(),
              [&](int a, int b) { return angle_less(pos[a] - pos[v], pos[b] - pos[v]); });
  }

  const Participant& base = region.participants[0];
  if (parts == 1 && base.facing.isolated) {
    out.boundary = base.facing;
  } else if (base.enclosing) {
    out.boundary = trace_cycle(out.rotation, base.facing.walk[0], base.facing.walk[1]);
  } else {
    auto [w, v] = outer_dart(drawing, out.rotation, all_vertices);
    out.boundary = trace_cycle(out.rotation, w, v);
  }
  out.boundary.component = base.component;
  return out;
}

Point2 corner_direction(const Point2& prev, const Point2& v, const Point2& next) {
  Point2 b = linf_unit(next - v);
  Point2 a = linf_unit(prev - v);
  Scalar c = cross(b, a);
  Point2 d;
  if (c > 0) {
    d = a + b;
  } else if (c < 0) {
    d = Point2(-(a.x + b.x), -(a.y + b.y));
  } else {
    d = Point2(-b.y, b.x);
  }
  return linf_unit(d);
}

OffsetFrame offset_frame(const BoundaryCycle& walk, std::span<const Point2> position) {
  OffsetFrame f;
  auto add = [&](int v, Point2 dir) {
    f.base.push_back(v);
    f.direction.push_back(std::move(dir));
  };
  if (walk.isolated) {
    const int v = walk.walk[0];
    f.first_copy.push_back(0);
    add(v, Point2(-1, 0));
    add(v, Point2(0, 1));
    add(v, Point2(1, 0));
    add(v, Point2(0, -1));
    return f;
  }
  const std::size_t n = walk.walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    f.first_copy.push_back(static_cast<int>(f.size()));
    Corner c = walk.corner(i);
    const Point2& v = position[c.vertex];
    if (c.prev == c.next) {
      Point2 e = linf_unit(position[c.next] - v);
      Point2 side(-e.y, e.x);
      add(c.vertex, linf_unit(Point2(-e.x - side.x, -e.y - side.y)));
      add(c.vertex, linf_unit(Point2(-e.x + side.x, -e.y + side.y)));
    } else {
      add(c.vertex, corner_direction(position[c.prev], v, position[c.next]));
    }
  }
  return f;
}

std::vector<Point2> OffsetFrame::polygon(std::span<const Point2> position, const Scalar& eps) const {
  std::vector<Point2> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i, position, eps));
  return out;
}

std::vector<Point2> offset_polygon(const BoundaryCycle& walk, std::span<const Point2> position,
                                   const Scalar& eps, std::vector<int>* first_copy) {
  OffsetFrame f = offset_frame(walk, position);
  if (first_copy) *first_copy = f.first_copy;
  return f.polygon(position, eps);
}

bool is_simple_polygon(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  std::vector<Box> boxes;
  boxes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) boxes.push_back(bounding_box(Segment{poly[i], poly[(i + 1) % n]}));
  bool ok = true;
  for_each_box_overlap(std::span<const Box>(boxes), [&](int i, int j) {
    if (!ok) return;
    Segment s{poly[i], poly[(i + 1) % n]};
    Segment t{poly[j], poly[(j + 1) % n]};
    auto kind = segments_properly_interact(s, t);
    const bool adjacent = (static_cast<std::size_t>(i + 1) % n == static_cast<std::size_t>(j)) ||
                          (static_cast<std::size_t>(j + 1) % n == static_cast<std::size_t>(i));
    if (adjacent ? kind != Interaction::share_endpoint_only : kind != Interaction::disjoint) {
      ok = false;
    }
  });
  if (!ok) return false;
  std::vector<Point2> sorted(poly.begin(), poly.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_simple_fattening(std::span<const Point2> poly, std::span<const Segment> avoid,
                         std::span<const Point2> avoid_points) {
  if (!is_simple_polygon(poly)) return false;
  const std::size_t n = poly.size();
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < n; ++i) boxes.push_back(bounding_box(Segment{poly[i], poly[(i + 1) % n]}));
  for (const auto& s : avoid) boxes.push_back(bounding_box(s));
  for (const auto& p : avoid_points) boxes.push_back(bounding_box(p));
  const int ns = static_cast<int>(n + avoid.size());
  bool ok = true;
  for_each_box_overlap(std::span<const Box>(boxes), [&](int i, int j) {
    if (!ok || i >= static_cast<int>(n)) return;  // only polygon vs obstacle pairs
    if (j < static_cast<int>(n)) return;
    Segment s{poly[i], poly[(i + 1) % n]};
    if (j < ns) {
      if (segments_intersect(s, avoid[j - n])) ok = false;
    } else if (point_on_closed_segment(avoid_points[j - ns], s)) {
      ok = false;
    }
  });
  return ok;
}

Scalar safe_epsilon(std::span<const PlanarDrawing> drawings) {
  std::optional<Scalar> m;
  std::size_t n = 1;
  for (const auto& d : drawings) {
    n = std::max(n, d.position.size());
    for (int axis = 0; axis < 2; ++axis) {
      std::vector<Scalar> cs;
      for (const auto& p : d.position) cs.push_back(axis == 0 ? p.x : p.y);
      std::sort(cs.begin(), cs.end());
      for (std::size_t i = 1; i < cs.size(); ++i) {
        Scalar diff = cs[i] - cs[i - 1];
        if (diff != 0 && (!m || diff < *m)) m = diff;
      }
    }
  }
  Scalar base = m ? *m : Scalar(1);
  return base / (8 * static_cast<long>(n));
}

Corner attachment_corner(const Participant& p, const LabelledGraph& g) {
  const BoundaryCycle& c = p.facing;
  if (c.isolated) return {c.walk[0], -1, -1};
  std::optional<Corner> best;
  auto key = [&](const Corner& k) {
    return std::make_tuple(g.label(k.vertex), g.label(k.prev), g.label(k.next));
  };
  for (const Corner& k : c.corners()) {
    if (!best || key(k) < key(*best)) best = k;
  }
  return *best;
}

int augmented_corner(const BoundaryCycle& augmented, const Corner& attachment,
                     const LabelledGraph& g) {
  const auto& w = augmented.walk;
  const std::size_t n = w.size();
  int best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] != attachment.vertex) continue;
    const int prev = w[(i + n - 1) % n];
    if (attachment.prev >= 0) {
      if (prev == attachment.prev) return static_cast<int>(i);
    } else if (best < 0 || g.label(prev) < g.label(w[(best + n - 1) % n])) {
      best = static_cast<int>(i);
    }
  }
  if (best < 0) throw std::logic_error("augmented_corner: attachment corner not on the walk");
  return best;
}

CostTable cost_table(const Region& region, const ConnectedAugmentation& ca,
                     std::span<const Corner> attachment, const LabelledGraph& g) {
  const std::size_t parts = region.participants.size();
  CostTable t;
  t.walk_size = static_cast<long>(ca.boundary.size());
  t.walk_index.resize(parts);
  t.position.resize(parts);
  t.rank.resize(parts);
  t.boundary_size.resize(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    t.boundary_size[p] = static_cast<long>(region.participants[p].facing.size());
  }
  if (parts == 1) return t;
  for (std::size_t p = 0; p < parts; ++p) t.walk_index[p] = augmented_corner(ca.boundary, attachment[p], g);
  const long n = t.walk_size;
  for (std::size_t p = 0; p < parts; ++p) {
    t.position[p] = static_cast<int>((t.walk_index[p] - t.walk_index[0] + n) % n);
  }
  for (std::size_t p = 0; p < parts; ++p) {
    long sum = 0;
    for (std::size_t q = 0; q < parts; ++q) {
      if (t.position[q] <= t.position[p]) sum += t.boundary_size[q];
    }
    t.rank[p] = t.position[p] + 2 * sum - t.boundary_size[0] - t.boundary_size[p];
  }
  return t;
}

long table_cost(const CostTable& table, int p, int q) {
  long d = table.rank[p] - table.rank[q];
  return d < 0 ? -d : d;
}

}  // namespace compaug
