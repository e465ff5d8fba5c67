#include "compaug/random_instance.hpp"
#include "compaug/route.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace compaug;

namespace {

PlanarDrawing drawing(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<Point2>& pos) {
  return testgen::make_instance(std::move(labels), edges, {pos}).drawings[0];
}

struct Prepared {
  Region region;
  ConnectedAugmentation ca;
  std::vector<Corner> att;
  CostTable table;
};

Prepared prepare(const PlanarDrawing& d, const Region& region) {
  Prepared p{region, connect_components(d, region), {}, {}};
  for (const auto& part : region.participants) p.att.push_back(attachment_corner(part, *d.graph));
  p.table = cost_table(p.region, p.ca, p.att, *d.graph);
  return p;
}

// The drawing plus the route as new vertices and edges.
PlanarDrawing with_route(const PlanarDrawing& d, const Route& route, const std::vector<Corner>& att) {
  const auto& g = *d.graph;
  std::vector<int> labels = g.labels();
  std::vector<Point2> pos(d.position);
  int next = labels.empty() ? 0 : labels.back() + 1;
  std::vector<int> id(route.points.size(), -1);
  for (std::size_t j = 0; j < route.site.size(); ++j) id[route.site[j]] = g.label(att[route.order[j]].vertex);
  for (std::size_t i = 0; i < id.size(); ++i) {
    if (id[i] >= 0) continue;
    id[i] = next++;
    labels.push_back(id[i]);
    pos.push_back(route.points[i]);
  }
  std::set<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) edges.insert({g.label(a), g.label(b)});
  for (std::size_t i = 0; i + 1 < id.size(); ++i) edges.insert({std::min(id[i], id[i + 1]), std::max(id[i], id[i + 1])});
  return testgen::make_instance(labels, {edges.begin(), edges.end()}, {pos}).drawings[0];
}

}  // namespace

TEST_CASE("clearance schedule is monotone") {
  ClearanceSchedule s{Scalar(1), Scalar(1, 10), Scalar(1, 4), 6};
  for (int j = 0; j + 1 < s.r; ++j) {
    CHECK(s.eps(j) < s.eps(j + 1));
    CHECK(s.delta(j) > s.delta(j + 1));
    CHECK(s.tau(j) > s.tau(j + 1));
    CHECK(s.lambda() < s.delta(j + 1));
    CHECK(s.eps(j) <= s.eps_max);
  }
}

TEST_CASE("right-of test at a segment tip") {
  auto edge = drawing({0, 1}, {{0, 1}}, {{0, 0}, {2, 0}});
  const Corner tip{0, 1, 1};
  const std::vector<Point2> good{{-1, -1}, {0, 0}, {-1, 1}};
  const std::vector<Point2> bad{{-1, 1}, {0, 0}, {-1, -1}};
  CHECK(check_right_of(edge, tip, good, 1));
  CHECK_FALSE(check_right_of(edge, tip, bad, 1));
  const std::vector<Point2> through{{-1, -1}, {0, 0}, {2, 0}};
  CHECK_FALSE(check_right_of(edge, tip, through, 1));
  const std::vector<Point2> end{{-1, -1}, {0, 0}};
  CHECK(check_right_of(edge, tip, end, 1));
  CHECK_THROWS_AS(check_right_of(edge, tip, end, 2), std::invalid_argument);

  auto dot = drawing({0}, {}, {{0, 0}});
  const Corner lone{0, -1, -1};
  CHECK(check_right_of(dot, lone, bad, 1));
}

TEST_CASE("a single participant routes to one point") {
  auto tri = drawing({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}});
  auto e = derive_embedding(tri);
  auto p = prepare(tri, outer_region(tri, e));
  const std::vector<int> order{0};
  auto route = draw_route(tri, p.region, p.ca, p.table, p.att, order);
  CHECK(route.points.size() == 1);
  CHECK(route.points[0] == tri.position[p.att[0].vertex]);
}

TEST_CASE("two segments joined by a route") {
  auto two = drawing({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 0}, {1, 0}, {3, 0}, {4, 1}});
  auto e = derive_embedding(two);
  auto p = prepare(two, outer_region(two, e));
  const std::vector<int> order{0, 1};
  RouteOptions opt;
  opt.check_invariants = true;
  auto route = draw_route(two, p.region, p.ca, p.table, p.att, order, opt);
  CHECK(route.hop_vertices(0) <= static_cast<std::size_t>(kRouteHopConstant * (table_cost(p.table, 0, 1) + 1)));
  CHECK(oracle::brute_planar(with_route(two, route, p.att)));
}

TEST_CASE("routes on random instances in random orders") {
  testgen::Rng rng(73);
  int routed = 0;
  for (int it = 0; it < 40; ++it) {
    RandomInstanceOptions o;
    o.n = 24 + 2 * it;
    o.r = 2 + it % 7;
    o.k = 1;
    o.seed = 900 + it;
    o.framed = it % 4 == 0;
    auto in = random_instance(o);
    const auto& d = in.drawings[0];
    const auto e = derive_embedding(d);
    for (const auto& region : oracle::regions_of(d, e)) {
      auto p = prepare(d, region);
      std::vector<int> order = testgen::permutation(rng, static_cast<int>(region.participants.size()));
      RouteOptions opt;
      opt.check_invariants = true;
      auto route = draw_route(d, p.region, p.ca, p.table, p.att, order, opt);
      for (std::size_t j = 0; j < order.size(); ++j) {
        CHECK(check_right_of(d, p.att[order[j]], route.points, route.site[j]));
      }
      for (std::size_t j = 0; j + 1 < order.size(); ++j) {
        // sigma walks along the split boundary, so take the pair in walk order.
        int a = order[j], b = order[j + 1];
        if (p.table.position[a] > p.table.position[b]) std::swap(a, b);
        const long c = oracle::sigma(p.region, p.ca, p.att, *d.graph, a, b);
        CHECK(route.hop_vertices(j) <= static_cast<std::size_t>(kRouteHopConstant * (c + 1)));
        CHECK(c == table_cost(p.table, order[j], order[j + 1]));
      }
      CHECK(oracle::brute_planar(with_route(d, route, p.att)));
      ++routed;
    }
  }
  CHECK(routed >= 40);
}
