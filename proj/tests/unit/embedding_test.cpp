#include "compaug/embedding.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace compaug;

namespace {

PlanarDrawing drawing(std::vector<int> labels, const std::vector<std::pair<int, int>>& edges,
                      const std::vector<Point2>& pos) {
  return testgen::make_instance(std::move(labels), edges, {pos}).drawings[0];
}

std::size_t vertex_count(const std::vector<int>& comp) { return comp.size(); }

}  // namespace

TEST_CASE("faces of small drawings") {
  auto tri = drawing({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}});
  auto e = derive_embedding(tri);
  CHECK(e.faces.faces.size() == 2);
  CHECK(e.faces.faces[e.faces.outer_face].components == std::vector<int>{0});

  auto inner = drawing({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  e = derive_embedding(inner);
  REQUIRE(e.faces.faces.size() == 2);
  const int f = e.faces.face_of_component[1];
  CHECK(f != e.faces.outer_face);
  CHECK(e.faces.faces[f].components == std::vector<int>{1});

  auto two = drawing({0, 1, 2, 3, 4, 5}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}},
                     {{0, 0}, {2, 0}, {0, 2}, {5, 0}, {7, 0}, {5, 2}});
  e = derive_embedding(two);
  CHECK(e.faces.faces.size() == 3);
  CHECK(e.faces.faces[e.faces.outer_face].components == std::vector<int>{0, 1});
}

TEST_CASE("face count follows the Euler formula") {
  testgen::Rng rng(29);
  for (int it = 0; it < 150; ++it) {
    auto d = testgen::greedy_planar(rng, 4 + it % 20, 12, 1 + it % 4);
    REQUIRE(validate_planar(d).ok());
    const auto e = derive_embedding(d);
    const auto& g = *d.graph;
    const long faces = static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) +
                       static_cast<long>(g.components().size()) + 1;
    CHECK(static_cast<long>(e.faces.faces.size()) == faces);
    // Every directed edge is walked exactly once.
    std::size_t darts = 0;
    for (const auto& c : e.faces.cycles) darts += c.size();
    CHECK(darts == 2 * g.edge_count());
  }
}

TEST_CASE("outer boundary corner counts") {
  auto edge = drawing({0, 1}, {{0, 1}}, {{0, 0}, {1, 0}});
  CHECK(outer_boundary({0, 1}, edge).size() == 2);
  auto tri = drawing({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}});
  CHECK(outer_boundary({0, 1, 2}, tri).size() == 3);
  auto path = drawing({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}}, {{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  const auto b = outer_boundary({0, 1, 2, 3}, path);
  CHECK(b.size() == 6);
  std::vector<int> seen(4, 0);
  for (int v : b.walk) ++seen[v];
  CHECK(seen == std::vector<int>{1, 2, 2, 1});
  CHECK_THROWS_AS(outer_boundary({0, 2}, path), std::invalid_argument);
}

TEST_CASE("outer boundary of a tree walks every edge twice") {
  testgen::Rng rng(31);
  for (int it = 0; it < 60; ++it) {
    auto d = testgen::greedy_planar(rng, 6 + it % 12, 15, 1);
    const auto& g = *d.graph;
    for (const auto& comp : g.components()) {
      std::size_t edges = 0;
      for (int v : comp) edges += g.adjacency()[v].size();
      edges /= 2;
      if (edges + 1 != vertex_count(comp) || edges == 0) continue;  // trees only
      CHECK(outer_boundary(comp, d).size() == 2 * edges);
    }
  }
}

TEST_CASE("rotation system is counterclockwise") {
  auto star = drawing({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}, {{0, 0}, {1, 0}, {-1, 1}, {0, -1}});
  auto rot = derive_rotation(star);
  CHECK(rot.ccw[0] == std::vector<int>{1, 2, 3});
  CHECK(rot.counterclockwise_after(0, 3) == 1);
  CHECK(rot.clockwise_after(0, 1) == 3);
}

TEST_CASE("isomorphism under motions and reflections") {
  testgen::Rng rng(37);
  auto star = drawing({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}, {{0, 0}, {3, 0}, {-1, 2}, {0, -1}});
  auto copies = testgen::translated_copies(star, 2, rng);
  CHECK(drawings_isomorphic(star, copies.drawings[0]));
  CHECK_FALSE(drawings_isomorphic(star, testgen::mirrored(star)));

  auto inside = drawing({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  auto outside = drawing({0, 1, 2, 3}, {{0, 1}, {1, 2}, {0, 2}}, {{0, 0}, {4, 0}, {0, 4}, {5, 5}});
  outside.graph = inside.graph;
  CHECK_FALSE(drawings_isomorphic(inside, outside));
  CHECK(isomorphism_mismatch(inside, outside).has_value());

  for (int it = 0; it < 40; ++it) {
    auto d = testgen::greedy_planar(rng, 5 + it % 15, 20, 2);
    auto c = testgen::translated_copies(d, 1, rng);
    CHECK(drawings_isomorphic(d, c.drawings[0]));
  }
}

TEST_CASE("derive_embedding rejects crossings") {
  auto cross = drawing({0, 1, 2, 3}, {{0, 1}, {2, 3}}, {{0, 0}, {2, 0}, {1, -1}, {1, 1}});
  CHECK_THROWS_AS(derive_embedding(cross), std::invalid_argument);
}
