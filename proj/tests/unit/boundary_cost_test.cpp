#include "compaug/boundary_cost.hpp"
#include "compaug/random_instance.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace compaug;

namespace {

PlanarDrawing drawing(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<Point2>& pos) {
  return testgen::make_instance(std::move(labels), edges, {pos}).drawings[0];
}

// The drawing with the extra edges of a connected augmentation added.
PlanarDrawing with_edges(const PlanarDrawing& d, const std::vector<std::pair<int, int>>& extra) {
  const auto& g = *d.graph;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
  for (const auto& [a, b] : extra) edges.emplace_back(g.label(a), g.label(b));
  std::vector<Point2> pos(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) pos[v] = d.position[v];
  return testgen::make_instance(g.labels(), edges, {pos}).drawings[0];
}

}  // namespace

TEST_CASE("connecting components of the outer face") {
  auto one = drawing({0, 1}, {{0, 1}}, {{0, 0}, {1, 0}});
  auto e = derive_embedding(one);
  CHECK(connect_components(one, outer_region(one, e)).extra_edges.empty());

  auto two = drawing({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 0}, {1, 0}, {3, 0}, {4, 1}});
  e = derive_embedding(two);
  auto ca = connect_components(two, outer_region(two, e));
  REQUIRE(ca.extra_edges.size() == 1);
  CHECK(with_edges(two, ca.extra_edges).graph->components().size() == 1);
}

TEST_CASE("connected augmentations are planar trees over the components") {
  testgen::Rng rng(67);
  for (int it = 0; it < 40; ++it) {
    RandomInstanceOptions o;
    o.n = 20 + it;
    o.r = 2 + it % 6;
    o.k = 1;
    o.seed = 100 + it;
    o.framed = it % 3 == 0;
    auto in = random_instance(o);
    const auto& d = in.drawings[0];
    const auto e = derive_embedding(d);
    for (const auto& region : oracle::regions_of(d, e)) {
      auto ca = connect_components(d, region);
      CHECK(ca.extra_edges.size() + 1 == region.participants.size());
      auto joined = with_edges(d, ca.extra_edges);
      CHECK(oracle::brute_planar(joined));
    }
  }
}

TEST_CASE("offset polygons") {
  auto square = drawing({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  auto e = derive_embedding(square);
  const auto& outer = e.faces.cycles[e.faces.outer_cycle_of_component[0]];
  auto poly = offset_polygon(outer, square.position, Scalar(1, 4));
  CHECK(poly.size() == 4);
  CHECK(is_simple_polygon(poly));
  for (const auto& p : square.position) CHECK(point_in_polygon(p, poly) == Containment::inside);

  auto edge = drawing({0, 1}, {{0, 1}}, {{0, 0}, {2, 0}});
  e = derive_embedding(edge);
  poly = offset_polygon(e.faces.cycles[e.faces.outer_cycle_of_component[0]], edge.position, Scalar(1, 8));
  CHECK(poly.size() == 4);  // two copies at each tip
  CHECK(is_simple_polygon(poly));

  auto dot = drawing({0}, {}, {{1, 1}});
  e = derive_embedding(dot);
  poly = offset_polygon(e.faces.cycles[e.faces.outer_cycle_of_component[0]], dot.position, Scalar(1));
  CHECK(poly == std::vector<Point2>{{0, 1}, {1, 2}, {2, 1}, {1, 0}});
}

TEST_CASE("a fattening too wide for a reflex corner is rejected") {
  // An L whose arms nearly touch a third segment.
  auto ell = drawing({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {3, 4}}, {{0, 4}, {0, 0}, {4, 0}, {1, 1}, {9, 1}});
  auto e = derive_embedding(ell);
  const auto& walk = e.faces.cycles[e.faces.outer_cycle_of_component[0]];
  const std::vector<Segment> avoid{{ell.position[3], ell.position[4]}};
  CHECK(is_simple_fattening(offset_polygon(walk, ell.position, Scalar(1, 4)), avoid));
  CHECK_FALSE(is_simple_fattening(offset_polygon(walk, ell.position, Scalar(2)), avoid));
  const std::vector<Point2> bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_FALSE(is_simple_polygon(bowtie));
}

TEST_CASE("safe epsilon") {
  auto grid = drawing({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  std::vector<PlanarDrawing> one{grid};
  CHECK(safe_epsilon(one) == Scalar(1, 32));
  for (auto& p : one[0].position) p = Scalar(10) * p;
  CHECK(safe_epsilon(one) == Scalar(5, 16));
}

TEST_CASE("cost table of two joined edges") {
  auto two = drawing({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 0}, {1, 0}, {3, 0}, {4, 1}});
  auto e = derive_embedding(two);
  auto region = outer_region(two, e);
  auto ca = connect_components(two, region);
  std::vector<Corner> att;
  for (const auto& p : region.participants) att.push_back(attachment_corner(p, *two.graph));
  auto t = cost_table(region, ca, att, *two.graph);
  CHECK(t.rank[0] == 0);
  CHECK(t.rank[1] == oracle::sigma(region, ca, att, *two.graph, 0, 1));
  CHECK(t.walk_size == 6);  // two doubled edges plus the doubled link
}

TEST_CASE("cost tables match the walk oracle") {
  testgen::Rng rng(71);
  for (int it = 0; it < 40; ++it) {
    RandomInstanceOptions o;
    o.n = 16 + 3 * it;
    o.r = 2 + it % 9;
    o.k = 1 + it % 3;
    o.seed = 500 + it;
    o.framed = it % 2 == 1;
    auto in = random_instance(o);
    CHECK(oracle::check_cost_tables(in) == "");
  }
}

TEST_CASE("attachment corners sit at the smallest label") {
  auto star = drawing({5, 2, 9, 7}, {{5, 2}, {5, 9}, {5, 7}}, {{0, 0}, {2, 0}, {-1, 2}, {0, -3}});
  auto e = derive_embedding(star);
  auto region = outer_region(star, e);
  const Corner c = attachment_corner(region.participants[0], *star.graph);
  CHECK(star.graph->label(c.vertex) == 2);
}
