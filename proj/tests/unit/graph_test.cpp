#include "compaug/graph.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace compaug;

TEST_CASE("labelled graph construction") {
  auto g = LabelledGraph::from_labels({7, 3, 5, 9}, {{3, 7}, {9, 5}});
  CHECK(g.labels() == std::vector<int>{3, 5, 7, 9});
  CHECK(g.index_of(9) == 3);
  CHECK(g.index_of(4) == -1);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  REQUIRE(g.components().size() == 2);
  CHECK(g.components()[0] == std::vector<int>{0, 2});
  CHECK(g.component_of(3) == 1);

  CHECK_THROWS_AS(LabelledGraph::from_labels({1, 2}, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LabelledGraph::from_labels({1, 2}, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(LabelledGraph::from_labels({1, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LabelledGraph::from_labels({1, 2}, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("validate_planar examples") {
  auto two = testgen::make_instance({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{{0, 0}, {1, 0}, {0, 2}, {1, 2}}});
  CHECK(validate_planar(two.drawings[0]).ok());

  auto cross = testgen::make_instance({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{{0, 0}, {2, 0}, {1, -1}, {1, 1}}});
  auto rep = validate_planar(cross.drawings[0]);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == Violation::Kind::edge_edge);
  CHECK(rep.violations[0].interaction == Interaction::cross);

  auto on = testgen::make_instance({0, 1, 2}, {{0, 1}}, {{{0, 0}, {2, 0}, {1, 0}}});
  rep = validate_planar(on.drawings[0]);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == Violation::Kind::vertex_on_edge);
  CHECK(rep.violations[0].a == 2);

  auto dup = testgen::make_instance({0, 1}, {}, {{{3, 3}, {3, 3}}});
  rep = validate_planar(dup.drawings[0]);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].kind == Violation::Kind::duplicate_position);
}

TEST_CASE("validate_planar matches a brute-force pair check") {
  testgen::Rng rng(3);
  int planar = 0;
  for (int it = 0; it < 300; ++it) {
    const int n = 3 + it % 9;
    auto pts = testgen::distinct_points(rng, n, 6);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (testgen::uniform(rng, 0, 9) < 2) edges.emplace_back(a, b);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    auto in = testgen::make_instance(labels, edges, {pts});
    bool ok = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Segment s{pts[edges[i].first], pts[edges[i].second]};
      for (int v = 0; v < n; ++v) ok = ok && !point_in_open_segment(pts[v], s);
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        ok = ok && !is_forbidden(segments_properly_interact(s, {pts[edges[j].first], pts[edges[j].second]}));
      }
    }
    CHECK(validate_planar(in.drawings[0]).ok() == ok);
    planar += ok;
  }
  CHECK(planar > 20);  // the generator exercises both outcomes
  CHECK(planar < 280);
}
