#include "compaug/augment.hpp"
#include "compaug/point_augment.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace compaug;

namespace {

// Ranks by sorting indices, independent of compute_ranks.
std::vector<int> sort_ranks(const std::vector<Point2>& pts) {
  std::vector<int> idx(pts.size()), rank(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
  for (std::size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = static_cast<int>(i);
  return rank;
}

PlanarDrawing polyline(const std::vector<Point2>& v) {
  std::vector<int> labels(v.size());
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return testgen::make_instance(labels, edges, {v}).drawings[0];
}

void check_path(const std::vector<Point2>& pts, const std::vector<int>& order, bool invariants) {
  OrderedPathOptions opt;
  opt.check_invariants = invariants;
  auto path = draw_ordered_path(pts, order, opt);
  REQUIRE(path.site.size() == order.size());
  for (std::size_t j = 0; j < order.size(); ++j) CHECK(path.vertices[path.site[j]] == pts[order[j]]);
  CHECK(validate_planar(polyline(path.vertices)).ok());
  const auto rank = sort_ranks(pts);
  for (std::size_t j = 0; j + 1 < order.size(); ++j) {
    const int gap = std::abs(rank[order[j]] - rank[order[j + 1]]);
    CHECK(path.hop_extras(j) <= static_cast<std::size_t>(kPointHopConstant * (gap + 1)));
  }
}

}  // namespace

TEST_CASE("ranks from x-order") {
  std::vector<std::vector<Point2>> d{{{5, 0}, {1, 0}, {9, 0}}};
  CHECK(compute_ranks(d)[0] == std::vector<int>{1, 0, 2});
  std::vector<std::vector<Point2>> inc{{{1, 3}, {2, 1}, {3, 2}}, {{3, 3}, {2, 1}, {1, 2}}};
  auto r = compute_ranks(inc);
  CHECK(r[0] == std::vector<int>{0, 1, 2});
  CHECK(r[1] == std::vector<int>{2, 1, 0});
  std::vector<std::vector<Point2>> tie{{{1, 5}, {1, 2}}};
  CHECK(compute_ranks(tie)[0] == std::vector<int>{1, 0});  // equal x: lower y first
}

TEST_CASE("ordered path through one point") {
  std::vector<Point2> one{{3, 4}};
  std::vector<int> order{0};
  auto p = draw_ordered_path(one, order);
  CHECK(p.vertices.size() == 1);
}

TEST_CASE("ordered path left to right on a line") {
  std::vector<Point2> pts;
  for (int i = 0; i < 10; ++i) pts.emplace_back(i * 3, 0);
  std::vector<int> order(10);
  std::iota(order.begin(), order.end(), 0);
  auto p = draw_ordered_path(pts, order);
  for (std::size_t j = 0; j + 1 < order.size(); ++j) CHECK(p.hop_extras(j) <= 2 * kPointHopConstant);
  check_path(pts, order, true);
}

TEST_CASE("ordered paths on random points keep budgets and invariants") {
  testgen::Rng rng(53);
  for (int it = 0; it < 120; ++it) {
    const int n = 2 + it % 18;
    auto pts = testgen::distinct_points(rng, n, 12);  // shared x values allowed
    check_path(pts, testgen::permutation(rng, n), true);
  }
}

TEST_CASE("ordered path input errors") {
  std::vector<Point2> dup{{0, 0}, {0, 0}};
  std::vector<int> order{0, 1};
  CHECK_THROWS_AS(draw_ordered_path(dup, order), std::invalid_argument);
  std::vector<Point2> two{{0, 0}, {1, 1}};
  std::vector<int> bad{0, 0};
  CHECK_THROWS_AS(draw_ordered_path(two, bad), std::invalid_argument);
}

TEST_CASE("two points need no subdivision") {
  auto in = testgen::make_instance({0, 1}, {}, {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}});
  auto pa = augment_points(in);
  REQUIRE(pa.chain.hops.size() == 1);
  CHECK(pa.chain.hops[0].budget() == 0);
  auto res = compatible_augment(in);
  CHECK(res.added_vertex_count() == 0);
  CHECK(res.added_edge_count() == 1);
}

TEST_CASE("hop distances are the larger rank gap") {
  testgen::Rng rng(59);
  const int n = 9;
  auto sigma = testgen::permutation(rng, n);
  std::vector<Point2> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[sigma[i]] = Point2(i, 0);
    b[sigma[i]] = Point2(n - i, 0);
  }
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  auto in = testgen::make_instance(labels, {}, {a, b});
  auto pa = augment_points(in);
  const auto ra = sort_ranks(a), rb = sort_ranks(b);
  for (std::size_t j = 0; j + 1 < pa.order.size(); ++j) {
    const int u = pa.order[j], v = pa.order[j + 1];
    CHECK(pa.hop_distance[j] == std::max(std::abs(ra[u] - ra[v]), std::abs(rb[u] - rb[v])));
  }
}

TEST_CASE("point instances augment compatibly") {
  testgen::Rng rng(61);
  for (int it = 0; it < 12; ++it) {
    auto in = testgen::point_instance(rng, 16, 2 + it % 3, 200);
    AugmentOptions opt;
    opt.check_invariants = true;
    auto res = compatible_augment(in, opt);
    CHECK(verify_result(in, res).empty());
    CHECK(res.added_edge_count() == res.added_vertex_count() + 15);
  }
  auto with_edge = testgen::make_instance({0, 1}, {{0, 1}}, {{{0, 0}, {1, 0}}});
  CHECK_THROWS_AS(augment_points(with_edge), std::invalid_argument);
}
