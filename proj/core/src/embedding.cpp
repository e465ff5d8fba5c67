#include "compaug/embedding.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace compaug {

namespace {

int slot_of(const std::vector<int>& ring, int x) {
  auto it = std::find(ring.begin(), ring.end(), x);
  if (it == ring.end()) throw std::logic_error("rotation lookup of a non-neighbour");
  return static_cast<int>(it - ring.begin());
}

using CycleKey = std::pair<int, int>;

CycleKey cycle_key(const BoundaryCycle& c, const LabelledGraph& g) {
  if (c.isolated) return {g.label(c.walk[0]), std::numeric_limits<int>::min()};
  CycleKey best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  const std::size_t n = c.walk.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, CycleKey{g.label(c.walk[i]), g.label(c.walk[(i + 1) % n])});
  }
  return best;
}

std::vector<Point2> cycle_polygon(const BoundaryCycle& c, const PlanarDrawing& d) {
  std::vector<Point2> poly;
  poly.reserve(c.walk.size());
  for (int v : c.walk) poly.push_back(d.position[v]);
  return poly;
}

}  // namespace

int RotationSystem::clockwise_after(int v, int from) const {
  const auto& ring = ccw[v];
  const int d = static_cast<int>(ring.size());
  return ring[(slot_of(ring, from) - 1 + d) % d];
}

int RotationSystem::counterclockwise_after(int v, int from) const {
  const auto& ring = ccw[v];
  const int d = static_cast<int>(ring.size());
  return ring[(slot_of(ring, from) + 1) % d];
}

Corner BoundaryCycle::corner(std::size_t i) const {
  if (isolated) return {walk[0], -1, -1};
  const std::size_t n = walk.size();
  return {walk[i], walk[(i + n - 1) % n], walk[(i + 1) % n]};
}

std::vector<Corner> BoundaryCycle::corners() const {
  std::vector<Corner> out;
  out.reserve(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i) out.push_back(corner(i));
  return out;
}

RotationSystem derive_rotation(const PlanarDrawing& drawing) {
  const LabelledGraph& g = *drawing.graph;
  RotationSystem rot;
  rot.ccw = g.adjacency();
  for (std::size_t v = 0; v < rot.ccw.size(); ++v) {
    const Point2& origin = drawing.position[v];
    // Same order as angle_less on the differences, without forming them.
    auto half = [&](const Point2& w) {
      return (w.y < origin.y || (w.y == origin.y && w.x < origin.x)) ? 1 : 0;
    };
    std::sort(rot.ccw[v].begin(), rot.ccw[v].end(), [&](int a, int b) {
      const Point2& pa = drawing.position[a];
      const Point2& pb = drawing.position[b];
      const int ha = half(pa), hb = half(pb);
      if (ha != hb) return ha < hb;
      return orient(origin, pa, pb) > 0;
    });
  }
  return rot;
}

BoundaryCycle trace_cycle(const RotationSystem& rotation, int u, int v) {
  BoundaryCycle cycle;
  int a = u, b = v;
  do {
    cycle.walk.push_back(a);
    int next = rotation.clockwise_after(b, a);
    a = b;
    b = next;
  } while (!(a == u && b == v));
  return cycle;
}

std::pair<int, int> outer_dart(const PlanarDrawing& drawing, const RotationSystem& rotation,
                               const std::vector<int>& vertices) {
  int low = vertices.front();
  for (int v : vertices) {
    const Point2& p = drawing.position[v];
    const Point2& q = drawing.position[low];
    if (p.y < q.y || (p.y == q.y && p.x < q.x)) low = v;
  }
  const auto& ring = rotation.ccw[low];
  if (ring.empty()) return {-1, low};
  // Neighbours of the lowest vertex all lie in [0, pi); the first one in
  // counterclockwise order has minimum polar angle.
  int best = ring.front();
  for (int w : ring) {
    if (angle_less(drawing.position[w] - drawing.position[low],
                   drawing.position[best] - drawing.position[low])) {
      best = w;
    }
  }
  return {best, low};
}

Embedding derive_embedding(const PlanarDrawing& drawing) {
  auto report = validate_planar(drawing);
  if (!report.ok()) throw std::invalid_argument("drawing is not planar: " + report.describe());
  return derive_embedding_unchecked(drawing);
}

Embedding derive_embedding_unchecked(const PlanarDrawing& drawing) {
  const LabelledGraph& g = *drawing.graph;
  Embedding emb;
  emb.rotation = derive_rotation(drawing);
  const auto& ccw = emb.rotation.ccw;
  FaceStructure& fs = emb.faces;

  const std::size_t nv = g.vertex_count();
  std::vector<int> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + static_cast<int>(ccw[v].size());
  std::vector<int> dart_cycle(offset[nv], -1);
  auto dart_id = [&](int u, int v) { return offset[u] + slot_of(ccw[u], v); };

  for (std::size_t u = 0; u < nv; ++u) {
    if (ccw[u].empty()) {
      BoundaryCycle iso;
      iso.walk = {static_cast<int>(u)};
      iso.isolated = true;
      iso.component = g.component_of(static_cast<int>(u));
      fs.cycles.push_back(std::move(iso));
      continue;
    }
    for (int v : ccw[u]) {
      if (dart_cycle[dart_id(static_cast<int>(u), v)] >= 0) continue;
      BoundaryCycle c = trace_cycle(emb.rotation, static_cast<int>(u), v);
      c.component = g.component_of(static_cast<int>(u));
      const int id = static_cast<int>(fs.cycles.size());
      const std::size_t n = c.walk.size();
      for (std::size_t i = 0; i < n; ++i) dart_cycle[dart_id(c.walk[i], c.walk[(i + 1) % n])] = id;
      fs.cycles.push_back(std::move(c));
    }
  }

  const auto& comps = g.components();
  fs.outer_cycle_of_component.assign(comps.size(), -1);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    auto [w, v] = outer_dart(drawing, emb.rotation, comps[ci]);
    if (w < 0) {
      for (std::size_t k = 0; k < fs.cycles.size(); ++k) {
        if (fs.cycles[k].isolated && fs.cycles[k].walk[0] == v) {
          fs.outer_cycle_of_component[ci] = static_cast<int>(k);
        }
      }
    } else {
      fs.outer_cycle_of_component[ci] = dart_cycle[dart_id(w, v)];
    }
  }

  // Faces: the unbounded one, then one per inner cycle.
  fs.faces.assign(1, Face{});
  std::vector<int> face_of_cycle(fs.cycles.size(), -1);
  std::vector<char> is_outer(fs.cycles.size(), 0);
  for (int oc : fs.outer_cycle_of_component) is_outer[oc] = 1;
  std::vector<std::vector<Point2>> polys(fs.cycles.size());
  std::vector<Box> poly_box(fs.cycles.size());
  std::vector<Scalar> area(fs.cycles.size());
  for (std::size_t k = 0; k < fs.cycles.size(); ++k) {
    if (is_outer[k]) continue;
    face_of_cycle[k] = static_cast<int>(fs.faces.size());
    Face f;
    f.enclosing_cycle = static_cast<int>(k);
    fs.faces.push_back(f);
    polys[k] = cycle_polygon(fs.cycles[k], drawing);
    area[k] = abs(signed_area2(polys[k]));
    Box b = bounding_box(polys[k][0]);
    for (const auto& p : polys[k]) {
      Box pb = bounding_box(p);
      b = {std::min(b.xmin, pb.xmin), std::min(b.ymin, pb.ymin), std::max(b.xmax, pb.xmax),
           std::max(b.ymax, pb.ymax)};
    }
    poly_box[k] = b;
  }

  fs.face_of_component.assign(comps.size(), 0);
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const Point2& rep = drawing.position[comps[ci].front()];
    const Box rb = bounding_box(rep);
    int best = -1;
    for (std::size_t k = 0; k < fs.cycles.size(); ++k) {
      if (is_outer[k] || fs.cycles[k].component == static_cast<int>(ci)) continue;
      if (!poly_box[k].overlaps(rb)) continue;
      if (point_in_polygon(rep, polys[k]) != Containment::inside) continue;
      if (best < 0 || area[k] < area[best]) best = static_cast<int>(k);
    }
    int face = best < 0 ? 0 : face_of_cycle[best];
    fs.face_of_component[ci] = face;
    fs.faces[face].components.push_back(static_cast<int>(ci));
    fs.faces[face].boundary_cycles.push_back(fs.outer_cycle_of_component[ci]);
  }
  return emb;
}

BoundaryCycle outer_boundary(const std::vector<int>& component, const PlanarDrawing& drawing) {
  const LabelledGraph& g = *drawing.graph;
  if (component.empty()) throw std::invalid_argument("empty component");
  int c = g.component_of(component.front());
  if (g.components()[c].size() != component.size()) {
    throw std::invalid_argument("vertex set is not a connected component");
  }
  for (int v : component) {
    if (g.component_of(v) != c) throw std::invalid_argument("vertex set is disconnected");
  }
  RotationSystem rot = derive_rotation(drawing);
  auto [w, v] = outer_dart(drawing, rot, component);
  if (w < 0) {
    BoundaryCycle iso;
    iso.walk = {v};
    iso.isolated = true;
    iso.component = c;
    return iso;
  }
  BoundaryCycle out = trace_cycle(rot, w, v);
  out.component = c;
  return out;
}

std::optional<std::string> isomorphism_mismatch(const PlanarDrawing& a, const PlanarDrawing& b) {
  if (!(*a.graph == *b.graph)) throw std::invalid_argument("drawings of different graphs");
  const LabelledGraph& g = *a.graph;
  Embedding ea = derive_embedding_unchecked(a);
  Embedding eb = derive_embedding_unchecked(b);

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& ra = ea.rotation.ccw[v];
    const auto& rb = eb.rotation.ccw[v];
    if (ra.empty()) continue;
    const int s = slot_of(rb, ra.front());
    for (std::size_t i = 0; i < ra.size(); ++i) {
      if (ra[i] != rb[(s + i) % rb.size()]) {
        return "rotation mismatch at vertex " + std::to_string(g.label(static_cast<int>(v)));
      }
    }
  }

  const auto& comps = g.components();
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    auto ka = cycle_key(ea.faces.cycles[ea.faces.outer_cycle_of_component[ci]], g);
    auto kb = cycle_key(eb.faces.cycles[eb.faces.outer_cycle_of_component[ci]], g);
    if (ka != kb) {
      return "outer face mismatch for component containing vertex " +
             std::to_string(g.label(comps[ci].front()));
    }
    auto enclosing = [&](const Embedding& e) -> std::optional<CycleKey> {
      int f = e.faces.face_of_component[ci];
      if (f == 0) return std::nullopt;
      return cycle_key(e.faces.cycles[e.faces.faces[f].enclosing_cycle], g);
    };
    if (enclosing(ea) != enclosing(eb)) {
      return "containment mismatch for component containing vertex " +
             std::to_string(g.label(comps[ci].front()));
    }
  }
  return std::nullopt;
}

bool drawings_isomorphic(const PlanarDrawing& a, const PlanarDrawing& b) {
  return !isomorphism_mismatch(a, b).has_value();
}

}  // namespace compaug
