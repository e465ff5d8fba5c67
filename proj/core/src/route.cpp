#include "compaug/route.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace compaug {

Scalar ClearanceSchedule::eps(int j) const {
  return eps_max * (Scalar(1, 2) + Scalar(j) / (2 * r));
}

Scalar ClearanceSchedule::delta(int j) const {
  return eps_max * delta_ratio * (Scalar(1, 2) - Scalar(j) / (2 * (r + 1)));
}

Scalar ClearanceSchedule::tau(int j) const { return tau0 / (j + 1); }

Scalar ClearanceSchedule::lambda() const { return eps_max * delta_ratio / (4 * (r + 1)); }

namespace {

// Direction x expressed in a frame whose positive x-axis is `base`, so that
// angle_less orders directions by counterclockwise angle from `base`.
Point2 relative(const Point2& base, const Point2& x) { return {dot(base, x), cross(base, x)}; }

bool at_zero_angle(const Point2& rel) { return rel.y == 0 && rel.x > 0; }

bool in_wedge(const PlanarDrawing& d, const Corner& c, const Point2& dir) {
  if (c.prev < 0) return true;
  const Point2& v = d.position[c.vertex];
  Point2 b = d.position[c.next] - v;
  Point2 rd = relative(b, dir);
  if (at_zero_angle(rd)) return false;
  if (c.prev == c.next) return true;
  return angle_less(rd, relative(b, d.position[c.prev] - v));
}

struct Crossing {
  Point2 point;
  int edge = -1;
  Scalar t;  // parameter along the query segment
};

// Crossing of segment s -> e with the closed polygon boundary that lies
// nearest to s (or nearest to e). Empty if none or if the segment runs
// along a polygon edge.
std::optional<Crossing> crossing(const Point2& s, const Point2& e, const std::vector<Point2>& poly,
                                 bool nearest_to_start, bool& degenerate) {
  std::optional<Crossing> best;
  const Segment q{s, e};
  const Point2 dir = e - s;
  const Scalar len2 = dot(dir, dir);
  const std::size_t n = poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    Segment edge{poly[k], poly[(k + 1) % n]};
    if (!segments_intersect(q, edge)) continue;
    auto x = line_intersection(q, edge);
    if (!x) {
      degenerate = true;
      continue;
    }
    Scalar t = dot(*x - s, dir) / len2;
    if (!best || (nearest_to_start ? t < best->t : best->t < t)) {
      best = Crossing{*x, static_cast<int>(k), t};
    }
  }
  return best;
}

bool segment_meets_polygon(const Segment& s, const std::vector<Point2>& poly) {
  if (point_in_polygon(s.a, poly) != Containment::outside) return true;
  if (point_in_polygon(s.b, poly) != Containment::outside) return true;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (segments_intersect(s, {poly[k], poly[(k + 1) % poly.size()]})) return true;
  }
  return false;
}

bool polygons_meet(const std::vector<Point2>& a, const std::vector<Point2>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (segment_meets_polygon({a[k], a[(k + 1) % a.size()]}, b)) return true;
  }
  return point_in_polygon(b[0], a) != Containment::outside;
}

// Copies of an offset polygon evaluated on demand.
struct LazyOffset {
  const OffsetFrame& frame;
  std::span<const Point2> position;
  Scalar eps;

  std::size_t size() const { return frame.size(); }
  Point2 operator[](std::size_t i) const { return frame.at(i, position, eps); }
};

class RouteBuilder {
 public:
  RouteBuilder(const PlanarDrawing& d, const Region& region, const ConnectedAugmentation& ca,
               const CostTable& table, std::span<const Corner> attachment,
               std::span<const int> order, const ClearanceSchedule& sched, Route& out)
      : d_(d), pos_(d.position), region_(region), ca_(ca), table_(table),
        attachment_(attachment), order_(order), sched_(sched), out_(out) {}

  std::string run(bool check) {
    const int r = static_cast<int>(region_.participants.size());
    out_ = Route{};
    out_.order.assign(order_.begin(), order_.end());
    out_.schedule = sched_;
    auto& R = out_.points;
    R.push_back(anchor(order_[0]));
    out_.site.push_back(0);
    if (r == 1) return {};

    frame_ = offset_frame(ca_.boundary, pos_);
    first_copy_ = frame_.first_copy;
    copies_ = static_cast<int>(frame_.size());
    wcopy_.resize(r);
    for (int p = 0; p < r; ++p) wcopy_[p] = first_copy_[table_.walk_index[p]];
    base_copy_ = wcopy_[0];
    visited_.assign(r, 0);
    arrived_dir_.assign(r, 0);
    visited_[order_[0]] = 1;

    for (int j = 0; j + 1 < r; ++j) {
      const int c = order_[j], t = order_[j + 1];
      const Scalar eps = sched_.eps(j);
      const LazyOffset fe{frame_, pos_, eps};
      const Scalar reach = sched_.tau(j) * eps;

      if (j > 0 && arrived_dir_[c] < 0 && !region_.participants[c].facing.isolated) {
        if (auto err = lambda_loop(c, fe[wcopy_[c]]); !err.empty()) return err;
      }
      push(fe[wcopy_[c]]);

      const int dir = copy_position(wcopy_[t]) > copy_position(wcopy_[c]) ? 1 : -1;
      int i = wcopy_[c];
      while (true) {
        const int nxt = (i + dir + copies_) % copies_;
        if (nxt == wcopy_[t]) {
          R.push_back(n_end(fe, nxt, -dir, reach));
          R.push_back(anchor(t));
          break;
        }
        const int u = pending_at(nxt, t);
        if (u >= 0) {
          if (auto err = detour(u, fe, nxt, dir, reach, sched_.delta(j)); !err.empty()) return err;
        } else {
          R.push_back(fe[nxt]);
        }
        i = nxt;
      }
      visited_[t] = 1;
      arrived_dir_[t] = dir;
      out_.site.push_back(R.size() - 1);
      if (check) {
        if (auto err = escape_check(j + 1); !err.empty()) return err;
      }
    }
    return certify();
  }

 private:
  Point2 anchor(int p) const { return pos_[attachment_[p].vertex]; }

  // Crossings may land on polygon vertices; never repeat a point.
  void push(const Point2& p) {
    if (out_.points.empty() || !(out_.points.back() == p)) out_.points.push_back(p);
  }

  int copy_position(int copy) const { return (copy - base_copy_ + copies_) % copies_; }

  int pending_at(int copy, int target) const {
    for (std::size_t p = 0; p < wcopy_.size(); ++p) {
      if (wcopy_[p] == copy && !visited_[p] && static_cast<int>(p) != target) return static_cast<int>(p);
    }
    return -1;
  }

  // End of the neighbourhood of copy k on its edge toward copy k + side.
  template <typename Poly>
  Point2 n_end(const Poly& fe, int k, int side, const Scalar& reach) const {
    const Point2 w = fe[k];
    const Point2 z = fe[(k + side + copies_) % copies_];
    Scalar f = reach / linf_norm(z - w);
    if (Scalar(1, 3) < f) f = Scalar(1, 3);
    return w + f * (z - w);
  }

  template <typename Poly>
  std::vector<Point2> cone(const Poly& fe, int p, const Scalar& reach) const {
    const int k = wcopy_[p];
    return convex_hull({anchor(p), n_end(fe, k, -1, reach), fe[k], n_end(fe, k, 1, reach)});
  }

  std::string lambda_loop(int c, const Point2& w) {
    auto& R = out_.points;
    const auto lp = offset_polygon(region_.participants[c].facing, pos_, sched_.lambda());
    const int n = static_cast<int>(lp.size());
    const Point2 a = anchor(c);
    const Point2 before = R[R.size() - 2];
    bool degenerate = false;
    auto in = crossing(before, a, lp, false, degenerate);
    auto out = crossing(w, a, lp, false, degenerate);
    if (!in || !out || degenerate) return "loop: no clean crossing with the inner offset";
    if (in->edge == out->edge) {
      // The departure must lie behind the arrival along the loop.
      const Point2& start = lp[in->edge];
      if (!(squared_distance(start, out->point) < squared_distance(start, in->point))) {
        return "loop: departure ahead of arrival";
      }
    }
    const int k = in->edge, m = out->edge;
    Scalar half(1, 2);
    push(in->point + half * (lp[(k + 1) % n] - in->point));
    int count = (m - k + n) % n;
    if (count == 0) count = n;
    for (int s = 1; s <= count; ++s) push(lp[(k + s) % n]);
    push(out->point);
    return {};
  }

  std::string detour(int u, const LazyOffset& fe, int k, int dir, const Scalar& reach,
                     const Scalar& delta) {
    const Point2 entry = n_end(fe, k, -dir, reach);
    const Point2 exit = n_end(fe, k, dir, reach);
    const Point2 a = anchor(u);
    const auto dp = offset_polygon(region_.participants[u].facing, pos_, delta);
    const int n = static_cast<int>(dp.size());
    bool degenerate = false;
    auto p = crossing(entry, a, dp, true, degenerate);
    auto q = crossing(exit, a, dp, true, degenerate);
    if (!p || !q || degenerate) return "detour: no clean crossing with the middle offset";
    const auto hull = convex_hull({a, entry, fe[k], exit});

    // Forward arc candidate from p to q along the polygon.
    std::vector<Point2> fwd, bwd;
    if (p->edge == q->edge) {
      const Point2& start = dp[p->edge];
      bool q_after_p = squared_distance(start, p->point) < squared_distance(start, q->point);
      if (!q_after_p) {
        for (int s = 1; s <= n; ++s) fwd.push_back(dp[(p->edge + s) % n]);
      } else {
        for (int s = 0; s < n; ++s) bwd.push_back(dp[(p->edge - s + n) % n]);
      }
    } else {
      for (int s = 1; s <= (q->edge - p->edge + n) % n; ++s) fwd.push_back(dp[(p->edge + s) % n]);
      for (int s = 0; s < (p->edge - q->edge + n) % n; ++s) bwd.push_back(dp[(p->edge - s + n) % n]);
    }
    auto first_point = [&](const std::vector<Point2>& arc) {
      return arc.empty() ? Scalar(1, 2) * (p->point + q->point) : arc.front();
    };
    auto midpoint_first = [&](const std::vector<Point2>& arc) {
      Point2 f = first_point(arc);
      return Point2((p->point.x + f.x) / 2, (p->point.y + f.y) / 2);
    };
    bool fwd_inside = point_in_polygon(midpoint_first(fwd), hull) != Containment::outside;
    const auto& arc = fwd_inside ? bwd : fwd;
    push(entry);
    push(p->point);
    for (const auto& x : arc) push(x);
    push(q->point);
    push(exit);
    return {};
  }

  // The clearance conditions that the next hop relies on.
  std::string escape_check(int next_hop) {
    const auto& R = out_.points;
    const Scalar eps = sched_.eps(next_hop);
    const Scalar reach = sched_.tau(next_hop) * eps;
    const auto fe = frame_.polygon(pos_, eps);
    const bool fe_holds_gstar = signed_area2(fe) < 0;
    std::ostringstream why;
    for (std::size_t s = 0; s + 1 < R.size(); ++s) {
      Segment seg{R[s], R[s + 1]};
      for (std::size_t k = 0; k < fe.size(); ++k) {
        if (segments_intersect(seg, {fe[k], fe[(k + 1) % fe.size()]})) {
          return "invariant: route meets the outer offset before hop " + std::to_string(next_hop);
        }
      }
    }
    for (const auto& p : R) {
      bool inside = point_in_polygon(p, fe) == Containment::inside;
      if (inside != fe_holds_gstar) {
        return "invariant: route leaves the offset strip before hop " + std::to_string(next_hop);
      }
    }
    std::vector<int> live;
    for (std::size_t p = 0; p < visited_.size(); ++p) {
      if (!visited_[p]) live.push_back(static_cast<int>(p));
    }
    for (int u : live) {
      const auto dp = offset_polygon(region_.participants[u].facing, pos_, sched_.delta(next_hop));
      const bool holds_component = signed_area2(dp) < 0;
      const auto hull = cone(fe, u, reach);
      for (std::size_t s = 0; s + 1 < R.size(); ++s) {
        Segment seg{R[s], R[s + 1]};
        for (std::size_t k = 0; k < dp.size(); ++k) {
          if (segments_intersect(seg, {dp[k], dp[(k + 1) % dp.size()]})) {
            return "invariant: route meets the offset of pending participant " + std::to_string(u);
          }
        }
        if (segment_meets_polygon(seg, hull)) {
          return "invariant: route meets the cone of pending participant " + std::to_string(u);
        }
      }
      for (const auto& p : R) {
        bool inside = point_in_polygon(p, dp) == Containment::inside;
        if (inside == holds_component) {
          return "invariant: route enters pending participant " + std::to_string(u);
        }
      }
    }
    std::vector<int> coned = live;
    const int current = order_[next_hop];
    coned.push_back(current);
    for (std::size_t x = 0; x < coned.size(); ++x) {
      for (std::size_t y = x + 1; y < coned.size(); ++y) {
        if (polygons_meet(cone(fe, coned[x], reach), cone(fe, coned[y], reach))) {
          return "invariant: cones of participants " + std::to_string(coned[x]) + " and " +
                 std::to_string(coned[y]) + " meet";
        }
      }
    }
    const Segment sight{anchor(current), fe[wcopy_[current]]};
    for (std::size_t s = 0; s + 1 < R.size(); ++s) {
      Segment seg{R[s], R[s + 1]};
      auto kind = segments_properly_interact(sight, seg);
      bool incident = s + 2 == R.size();
      if (incident ? kind != Interaction::share_endpoint_only : kind != Interaction::disjoint) {
        return "invariant: participant " + std::to_string(current) + " cannot see its copy";
      }
    }
    return {};
  }

  std::string certify() {
    const auto& R = out_.points;
    const LabelledGraph& g = *d_.graph;
    // Route points that are not sites become fresh vertices.
    std::vector<int> labels = g.labels();
    int next_label = labels.empty() ? 0 : labels.back() + 1;
    std::vector<int> route_label(R.size());
    std::vector<std::size_t> sites = out_.site;
    std::size_t si = 0;
    std::vector<Point2> position = pos_;
    for (std::size_t i = 0; i < R.size(); ++i) {
      if (si < sites.size() && sites[si] == i) {
        route_label[i] = g.label(attachment_[out_.order[si]].vertex);
        ++si;
      } else {
        route_label[i] = next_label++;
        labels.push_back(route_label[i]);
        position.push_back(R[i]);
      }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
    for (std::size_t i = 0; i + 1 < R.size(); ++i) edges.emplace_back(route_label[i], route_label[i + 1]);
    PlanarDrawing combined;
    try {
      combined.graph = std::make_shared<LabelledGraph>(LabelledGraph::from_labels(labels, edges));
    } catch (const std::invalid_argument& e) {
      return std::string("route: ") + e.what();
    }
    // from_labels sorts labels; fresh labels are larger, so order is kept.
    combined.position = std::move(position);
    auto report = validate_planar(combined);
    if (!report.ok()) {
      return "route not planar: " + report.violations.front().describe();
    }
    for (std::size_t j = 0; j < out_.order.size(); ++j) {
      if (!check_right_of(d_, attachment_[out_.order[j]], R, out_.site[j])) {
        return "participant " + std::to_string(out_.order[j]) + " not right of the route";
      }
    }
    for (std::size_t j = 0; j + 1 < out_.order.size(); ++j) {
      long cost = table_cost(table_, out_.order[j], out_.order[j + 1]);
      if (static_cast<long>(out_.hop_vertices(j)) > kRouteHopConstant * (cost + 1)) {
        return "hop " + std::to_string(j) + " over budget";
      }
    }
    return {};
  }

  const PlanarDrawing& d_;
  const std::vector<Point2>& pos_;
  const Region& region_;
  const ConnectedAugmentation& ca_;
  const CostTable& table_;
  std::span<const Corner> attachment_;
  std::span<const int> order_;
  const ClearanceSchedule& sched_;
  Route& out_;

  OffsetFrame frame_;
  std::vector<int> first_copy_;
  int copies_ = 0;
  std::vector<int> wcopy_;
  int base_copy_ = 0;
  std::vector<char> visited_;
  std::vector<int> arrived_dir_;
};

}  // namespace

bool check_right_of(const PlanarDrawing& drawing, const Corner& corner,
                    std::span<const Point2> route, std::size_t site) {
  if (site >= route.size()) throw std::invalid_argument("check_right_of: site out of range");
  const Point2& v = drawing.position[corner.vertex];
  if (!(route[site] == v)) throw std::invalid_argument("check_right_of: corner not on the route");
  const LabelledGraph& g = *drawing.graph;

  const auto& members = g.components()[g.component_of(corner.vertex)];
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (i == site) continue;
    for (int m : members) {
      if (route[i] == drawing.position[m]) return false;
    }
  }

  std::optional<Point2> prev, next;
  if (site > 0) prev = route[site - 1] - v;
  if (site + 1 < route.size()) next = route[site + 1] - v;
  if (prev && !in_wedge(drawing, corner, *prev)) return false;
  if (next && !in_wedge(drawing, corner, *next)) return false;
  if (!prev || !next) return true;

  // Turning clockwise from prev, next must come before every graph edge:
  // it has the largest counterclockwise angle from prev.
  Point2 rn = relative(*prev, *next);
  if (at_zero_angle(rn)) return false;
  for (int w : g.adjacency()[corner.vertex]) {
    Point2 rw = relative(*prev, drawing.position[w] - v);
    if (at_zero_angle(rw) || !angle_less(rw, rn)) return false;
  }
  return true;
}

std::string try_route(const PlanarDrawing& drawing, const Region& region,
                      const ConnectedAugmentation& ca, const CostTable& table,
                      std::span<const Corner> attachment, std::span<const int> order,
                      const ClearanceSchedule& schedule, bool check_invariants, Route& out) {
  if (order.size() != region.participants.size()) {
    throw std::invalid_argument("try_route: order does not cover the participants");
  }
  RouteBuilder builder(drawing, region, ca, table, attachment, order, schedule, out);
  return builder.run(check_invariants);
}

Route draw_route(const PlanarDrawing& drawing, const Region& region,
                 const ConnectedAugmentation& ca, const CostTable& table,
                 std::span<const Corner> attachment, std::span<const int> order,
                 const RouteOptions& options) {
  ClearanceSchedule sched;
  sched.eps_max = safe_epsilon(std::span<const PlanarDrawing>(&drawing, 1));
  sched.tau0 = Scalar(1, 4);
  sched.r = static_cast<int>(region.participants.size());
  std::string last;
  for (int round = 0; round < options.max_rounds; ++round) {
    Route route;
    last = try_route(drawing, region, ca, table, attachment, order, sched,
                     options.check_invariants, route);
    if (last.empty()) {
      route.rounds = round + 1;
      return route;
    }
    sched.eps_max /= 2;
    sched.tau0 /= 2;
    sched.delta_ratio /= 2;
  }
  throw RouteError("route failed after " + std::to_string(options.max_rounds) + " rounds: " + last);
}

}  // namespace compaug
