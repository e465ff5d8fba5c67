#include "oracles.hpp"

#include "compaug/embedding.hpp"

#include <numeric>

namespace oracle {

using namespace compaug;

std::vector<Region> regions_of(const PlanarDrawing& d, const Embedding& e) {
  std::vector<Region> out;
  const auto& fs = e.faces;
  if (fs.faces[fs.outer_face].components.size() > 1) out.push_back(outer_region(d, e));
  for (std::size_t f = 0; f < fs.faces.size(); ++f) {
    if (static_cast<int>(f) != fs.outer_face && !fs.faces[f].components.empty()) {
      out.push_back(face_region(d, e, static_cast<int>(f)));
    }
  }
  return out;
}

int walk_step(const ConnectedAugmentation& ca, const Corner& a, const LabelledGraph& g) {
  const auto& w = ca.boundary.walk;
  const int n = static_cast<int>(w.size());
  int found = -1;
  for (int s = 0; s < n; ++s) {
    if (w[s] != a.vertex) continue;
    const int before = w[(s + n - 1) % n];
    if (a.prev >= 0) {
      if (before == a.prev) return s;
    } else if (found < 0 || g.label(before) < g.label(w[(found + n - 1) % n])) {
      found = s;
    }
  }
  return found;
}

long sigma(const Region& region, const ConnectedAugmentation& ca, const std::vector<Corner>& att,
           const LabelledGraph& g, int p, int q) {
  if (p == q) return 0;
  const int n = static_cast<int>(ca.boundary.walk.size());
  std::vector<int> step(att.size());
  for (std::size_t i = 0; i < att.size(); ++i) step[i] = walk_step(ca, att[i], g);
  auto size = [&](int i) { return static_cast<long>(region.participants[i].facing.size()); };
  long edges = 0, sum = 0;
  int s = step[p];
  while (true) {
    for (std::size_t i = 0; i < att.size(); ++i) {
      if (step[i] == s) sum += size(static_cast<int>(i));
    }
    if (s == step[q]) break;
    s = (s + 1) % n;
    ++edges;
  }
  return edges + 2 * sum - size(p) - size(q);
}

std::string check_cost_tables(const Instance& in) {
  const LabelledGraph& g = *in.graph;
  const long six_n = 6 * static_cast<long>(g.vertex_count());
  for (std::size_t di = 0; di < in.drawings.size(); ++di) {
    const auto& d = in.drawings[di];
    const Embedding e = derive_embedding(d);
    for (const Region& region : regions_of(d, e)) {
      const ConnectedAugmentation ca = connect_components(d, region);
      std::vector<Corner> att;
      for (const auto& p : region.participants) att.push_back(attachment_corner(p, g));
      const CostTable t = cost_table(region, ca, att, g);
      const int r = static_cast<int>(att.size());
      const std::string where = "drawing " + std::to_string(di) + " face " + std::to_string(region.face);
      std::vector<long> rank(r);
      for (int p = 0; p < r; ++p) {
        rank[p] = sigma(region, ca, att, g, 0, p);
        if (rank[p] != t.rank[p]) return where + ": rank mismatch at participant " + std::to_string(p);
        if (rank[p] < 0 || rank[p] >= six_n) return where + ": rank out of [0, 6n)";
      }
      const int len = static_cast<int>(ca.boundary.walk.size());
      std::vector<int> pos(r);
      for (int p = 0; p < r; ++p) pos[p] = (walk_step(ca, att[p], g) - walk_step(ca, att[0], g) + len) % len;
      for (int p = 0; p < r; ++p) {
        for (int q = 0; q < r; ++q) {
          if (pos[p] > pos[q] || p == q) continue;
          const long direct = sigma(region, ca, att, g, p, q);
          if (direct != rank[q] - rank[p]) return where + ": telescoping fails for " + std::to_string(p) + ", " + std::to_string(q);
          if (table_cost(t, p, q) != direct) return where + ": table cost differs";
        }
      }
    }
  }
  return {};
}

bool brute_planar(const PlanarDrawing& d) {
  const auto& g = *d.graph;
  const auto& edges = g.edges();
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t u = v + 1; u < g.vertex_count(); ++u)
      if (d.position[v] == d.position[u]) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Segment s = d.edge_segment(edges[i]);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (point_in_open_segment(d.position[v], s)) return false;
    }
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (is_forbidden(segments_properly_interact(s, d.edge_segment(edges[j])))) return false;
    }
  }
  return true;
}

std::string check_result(const Instance& in, const CompatibleResult& res, std::size_t brute_limit) {
  const LabelledGraph& g = *in.graph;
  const LabelledGraph& h = *res.graph;
  if (res.drawings.size() != in.drawings.size()) return "drawing count changed";
  for (std::size_t i = 0; i < in.drawings.size(); ++i) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const int hv = h.index_of(g.label(static_cast<int>(v)));
      if (hv < 0 || !(res.drawings[i].position[hv] == in.drawings[i].position[v])) return "input vertex moved";
    }
    const bool planar = h.edge_count() <= brute_limit ? brute_planar(res.drawings[i]) : validate_planar(res.drawings[i]).ok();
    if (!planar) return "drawing " + std::to_string(i) + " is not planar";
  }
  for (const auto& [a, b] : g.edges()) {
    if (!h.has_edge(h.index_of(g.label(a)), h.index_of(g.label(b)))) return "input edge lost";
  }
  std::vector<int> parent(h.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t groups = h.vertex_count();
  for (const auto& [a, b] : h.edges()) {
    const int x = find(a), y = find(b);
    if (x != y) parent[x] = y, --groups;
  }
  if (groups > 1) return "augmented graph is not connected";
  for (std::size_t i = 1; i < res.drawings.size(); ++i) {
    if (!drawings_isomorphic(res.drawings[0], res.drawings[i])) return "augmented drawings differ";
  }
  return {};
}

}  // namespace oracle
