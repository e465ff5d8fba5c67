#include "compaug/point_augment.hpp"

#include "compaug/linf_path.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace compaug {

std::vector<std::vector<int>> compute_ranks(std::span<const std::vector<Point2>> drawings) {
  std::vector<std::vector<int>> ranks;
  for (const auto& pts : drawings) {
    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
    std::vector<int> r(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) r[idx[i]] = static_cast<int>(i);
    ranks.push_back(std::move(r));
  }
  return ranks;
}

namespace {

using Triangle = std::array<Point2, 3>;  // counterclockwise: left base, right base, apex

Triangle cone_triangle(const Point2& v, const Scalar& apex_y, const Scalar& slope,
                       const Scalar& baseline) {
  Scalar w = slope * (apex_y - baseline);
  return {Point2(v.x - w, baseline), Point2(v.x + w, baseline), Point2(v.x, apex_y)};
}

bool segment_meets_triangle(const Segment& s, const Triangle& t) {
  if (point_in_polygon(s.a, t) != Containment::outside) return true;
  if (point_in_polygon(s.b, t) != Containment::outside) return true;
  for (int i = 0; i < 3; ++i) {
    if (segments_intersect(s, {t[i], t[(i + 1) % 3]})) return true;
  }
  return false;
}

Box triangle_box(const Triangle& t) {
  Box a = bounding_box(Segment{t[0], t[1]});
  Box b = bounding_box(t[2]);
  return {std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin), std::max(a.xmax, b.xmax),
          std::max(a.ymax, b.ymax)};
}

// Distinct x-coordinates via a concrete shear x' = x + theta y that keeps the
// lexicographic order of the input.
Scalar shear_factor(std::span<const Point2> pts) {
  std::vector<Scalar> xs;
  Scalar ymin = pts[0].y, ymax = pts[0].y;
  for (const auto& p : pts) {
    xs.push_back(p.x);
    if (p.y < ymin) ymin = p.y;
    if (ymax < p.y) ymax = p.y;
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Scalar gap = 1;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    Scalar d = xs[i] - xs[i - 1];
    if (i == 1 || d < gap) gap = d;
  }
  return gap / (2 * (ymax - ymin + 1));
}

}  // namespace

std::vector<std::string> escape_violations(std::span<const Point2> points,
                                           std::span<const int> order, std::size_t current,
                                           const ConeState& st, std::span<const Point2> path) {
  std::vector<std::string> out;
  auto say = [&](int v, const std::string& what) {
    std::ostringstream os;
    os << "point " << v << ": " << what;
    out.push_back(os.str());
  };

  for (const auto& p : path) {
    if (!(st.baseline < p.y)) {
      out.push_back("path touches the baseline");
      break;
    }
  }

  std::vector<int> live(order.begin() + static_cast<std::ptrdiff_t>(current), order.end());
  std::vector<Triangle> tri;
  for (int v : live) tri.push_back(cone_triangle(points[v], st.apex_y[v], st.slope[v], st.baseline));

  for (std::size_t a = 0; a < live.size(); ++a) {
    const int v = live[a];
    const Point2& p = points[v];
    const bool is_current = a == 0;
    if (is_current ? st.apex_y[v] != p.y : !(p.y < st.apex_y[v])) {
      say(v, "apex not at the required height");
    }
    if (point_in_polygon(p, tri[a]) == Containment::outside) say(v, "cone misses its point");
    if (point_in_polygon(Point2(p.x, st.baseline), tri[a]) == Containment::outside) {
      say(v, "cone misses the downward ray");
    }
    const Box tb = triangle_box(tri[a]);
    for (std::size_t u = 0; u < points.size(); ++u) {
      if (static_cast<int>(u) == v || !tb.overlaps(bounding_box(points[u]))) continue;
      if (point_in_polygon(points[u], tri[a]) != Containment::outside) {
        say(v, "cone contains point " + std::to_string(u));
      }
    }
    for (std::size_t s = 0; s + 1 < path.size(); ++s) {
      Segment seg{path[s], path[s + 1]};
      if (!tb.overlaps(bounding_box(seg))) continue;
      bool bad = is_current ? segment_meets_convex_interior(seg, tri[a])
                            : segment_meets_triangle(seg, tri[a]);
      if (bad) {
        say(v, "cone meets the path");
        break;
      }
    }
    if (path.size() == 1 && !is_current && point_in_polygon(path[0], tri[a]) != Containment::outside) {
      say(v, "cone meets the path");
    }
  }

  // Downward cones are disjoint above the baseline iff their base intervals are.
  std::vector<std::size_t> by_x(live.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](std::size_t a, std::size_t b) { return points[live[a]].x < points[live[b]].x; });
  for (std::size_t i = 1; i < by_x.size(); ++i) {
    if (!(tri[by_x[i - 1]][1].x < tri[by_x[i]][0].x)) {
      say(live[by_x[i]], "cone overlaps its left neighbour");
    }
  }
  return out;
}

OrderedPath draw_ordered_path(std::span<const Point2> input, std::span<const int> order,
                              const OrderedPathOptions& options) {
  const std::size_t n = input.size();
  if (order.size() != n) throw std::invalid_argument("draw_ordered_path: order is not a permutation");
  {
    std::vector<int> check(order.begin(), order.end());
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (check[i] != static_cast<int>(i)) {
        throw std::invalid_argument("draw_ordered_path: order is not a permutation");
      }
    }
    std::vector<Point2> sorted(input.begin(), input.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("draw_ordered_path: duplicate points");
    }
  }
  OrderedPath result;
  if (n == 0) return result;

  const Scalar theta = shear_factor(input);
  std::vector<Point2> pts;
  for (const auto& p : input) pts.emplace_back(p.x + theta * p.y, p.y);

  Scalar ymin = pts[0].y, ymax = pts[0].y;
  std::vector<Scalar> xs;
  for (const auto& p : pts) {
    if (p.y < ymin) ymin = p.y;
    if (ymax < p.y) ymax = p.y;
    xs.push_back(p.x);
  }
  std::sort(xs.begin(), xs.end());
  Scalar gap = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (i == 1 || xs[i] - xs[i - 1] < gap) gap = xs[i] - xs[i - 1];
  }
  const Scalar h = ymax - ymin + 1;
  const Scalar step = h / (4 * static_cast<long>(n));

  ConeState st;
  st.baseline = ymin - 1;
  const Scalar top = ymax + h;
  const Scalar slope0 = (gap / 4) / (top - st.baseline);
  st.apex_y.assign(n, top);
  st.slope.assign(n, slope0);
  st.apex_y[order[0]] = pts[order[0]].y;

  std::vector<char> visited(n, 0);
  std::vector<Point2> path{pts[order[0]]};
  result.site.push_back(0);
  visited[order[0]] = 1;

  auto verify = [&](std::size_t current) {
    if (!options.check_invariants) return;
    auto bad = escape_violations(pts, order, current, st, path);
    if (!bad.empty()) {
      std::string msg = "escape invariant violated after hop " + std::to_string(current);
      for (const auto& b : bad) msg += "; " + b;
      throw EscapeInvariantError(msg);
    }
  };
  verify(0);

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const int c = order[j];
    const int t = order[j + 1];
    st.apex_y[t] = pts[t].y;

    bool direct = false;
    if (options.shortcuts) {
      Segment seg{pts[c], pts[t]};
      const Box sb = bounding_box(seg);
      direct = true;
      for (std::size_t s = 0; direct && s + 1 < path.size(); ++s) {
        Segment other{path[s], path[s + 1]};
        if (!sb.overlaps(bounding_box(other))) continue;
        auto kind = segments_properly_interact(seg, other);
        bool touches_c = s + 2 == path.size();
        if (touches_c ? kind != Interaction::share_endpoint_only : kind != Interaction::disjoint) {
          direct = false;
        }
      }
      for (std::size_t u = 0; direct && u < n; ++u) {
        if (static_cast<int>(u) == c || static_cast<int>(u) == t) continue;
        if (visited[u]) {
          if (sb.overlaps(bounding_box(pts[u])) && point_on_closed_segment(pts[u], seg)) direct = false;
          continue;
        }
        Triangle tri = cone_triangle(pts[u], st.apex_y[u], st.slope[u], st.baseline);
        if (sb.overlaps(triangle_box(tri)) && segment_meets_triangle(seg, tri)) direct = false;
      }
      if (direct) {
        Triangle tt = cone_triangle(pts[t], st.apex_y[t], st.slope[t], st.baseline);
        if (segment_meets_convex_interior(seg, tt)) direct = false;
      }
    }

    if (!direct) {
      const int dir = pts[c].x < pts[t].x ? 1 : -1;
      auto corner = [&](int v, int side) {
        Scalar w = st.slope[v] * (st.apex_y[v] - st.baseline);
        return Point2(pts[v].x + Scalar(side) * w, st.baseline);
      };
      path.push_back(corner(c, dir));
      std::vector<int> between;
      for (std::size_t u = 0; u < n; ++u) {
        if (visited[u] || static_cast<int>(u) == t) continue;
        const Scalar& x = pts[u].x;
        if ((pts[c].x < x && x < pts[t].x) || (pts[t].x < x && x < pts[c].x)) {
          between.push_back(static_cast<int>(u));
        }
      }
      std::sort(between.begin(), between.end(), [&](int a, int b) {
        return dir > 0 ? pts[a].x < pts[b].x : pts[b].x < pts[a].x;
      });
      for (int u : between) {
        path.push_back(corner(u, -dir));
        path.emplace_back(pts[u].x, st.apex_y[u]);
        path.push_back(corner(u, dir));
      }
      path.push_back(corner(t, -dir));
    }
    path.push_back(pts[t]);
    result.site.push_back(path.size() - 1);
    visited[t] = 1;

    st.baseline -= step;
    for (std::size_t i = j + 2; i < n; ++i) st.apex_y[order[i]] -= step;
    st.slope[t] /= 2;
    verify(j + 1);
  }

  for (auto& p : path) p.x -= theta * p.y;
  result.vertices = std::move(path);
  return result;
}

PointAugmentation augment_points(const Instance& instance, const OrderedPathOptions& options) {
  const LabelledGraph& g = *instance.graph;
  if (g.edge_count() != 0) throw std::invalid_argument("augment_points: graph has edges");
  if (instance.drawings.empty()) throw std::invalid_argument("augment_points: no drawings");
  for (const auto& d : instance.drawings) {
    if (!(*d.graph == g)) throw std::invalid_argument("augment_points: drawings over different labels");
  }
  PointAugmentation out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;

  std::vector<std::vector<Point2>> positions;
  for (const auto& d : instance.drawings) positions.push_back(d.position);
  auto ranks = compute_ranks(positions);

  std::vector<GridPoint> grid(n);
  for (std::size_t v = 0; v < n; ++v) {
    grid[v].label = g.label(static_cast<int>(v));
    for (const auto& r : ranks) grid[v].coords.emplace_back(r[v]);
  }
  SpanningPath sp = improve_path(spanning_path(grid), grid);
  for (int label : sp.order) out.order.push_back(g.index_of(label));
  if (out.order.size() > 1 && g.label(out.order.back()) < g.label(out.order.front())) {
    std::reverse(out.order.begin(), out.order.end());
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out.hop_distance.push_back(linf_distance(grid[out.order[j]], grid[out.order[j + 1]]));
  }

  out.chain.hops.resize(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out.chain.hops[j].from = out.order[j];
    out.chain.hops[j].to = out.order[j + 1];
  }
  for (const auto& pts : positions) {
    OrderedPath path = draw_ordered_path(pts, out.order, options);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      out.chain.hops[j].interior.emplace_back(
          path.vertices.begin() + static_cast<std::ptrdiff_t>(path.site[j] + 1),
          path.vertices.begin() + static_cast<std::ptrdiff_t>(path.site[j + 1]));
    }
  }
  // Equal counts in every drawing, as the chain promises.
  for (auto& hop : out.chain.hops) {
    const std::size_t b = hop.budget();
    for (std::size_t i = 0; i < positions.size(); ++i) {
      hop.interior[i] = pad_hop(positions[i][hop.from], hop.interior[i], positions[i][hop.to], b);
    }
  }
  return out;
}

}  // namespace compaug
