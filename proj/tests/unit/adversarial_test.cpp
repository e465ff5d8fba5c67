#include "compaug/adversarial.hpp"
#include "compaug/embedding.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace compaug;

namespace {

// Separation by the definition, then the threshold in floating point with
// a margin; only clear-cut cases are compared.
int separation(const PermutationFamily& f, int i) {
  int best = f.r;
  for (int j = 0; j < f.r; ++j) {
    if (j == i) continue;
    int far = 0;
    for (int s = 0; s < f.k; ++s) far = std::max(far, std::abs(f.perm[s][i] - f.perm[s][j]));
    best = std::min(best, far);
  }
  return best;
}

}  // namespace

TEST_CASE("threshold values") {
  auto f = sample_permutation_family(2, 1, 0);
  CHECK(f.threshold() == doctest::Approx(0.25));
  CHECK(f.good.size() == 2);
  auto g = sample_permutation_family(65, 2, 3);
  CHECK(g.threshold() == doctest::Approx(4 / std::sqrt(2.0)));
}

TEST_CASE("good indices match the definition") {
  for (int r : {8, 33, 65, 100}) {
    for (int k : {2, 3}) {
      auto f = sample_permutation_family(r, k, 1000 + r * 10 + k);
      CHECK(static_cast<int>(f.good.size()) * 2 >= r);
      for (int s = 0; s < k; ++s) {
        auto p = f.perm[s];
        std::sort(p.begin(), p.end());
        for (int i = 0; i < r; ++i) CHECK(p[i] == i);
      }
      const double t = f.threshold();
      for (int i = 0; i < r; ++i) {
        const int sep = separation(f, i);
        CHECK(sep == f.separation(i));
        if (sep > t * 1.0001) CHECK(f.is_good(i));
        if (sep < t * 0.9999) CHECK_FALSE(f.is_good(i));
        const bool listed = std::find(f.good.begin(), f.good.end(), i) != f.good.end();
        CHECK(listed == f.is_good(i));
      }
    }
  }
}

TEST_CASE("family sampling rejects bad sizes and is seeded") {
  CHECK_THROWS_AS(sample_permutation_family(1, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_permutation_family(4, 0, 0), std::invalid_argument);
  CHECK(sample_permutation_family(20, 3, 5).perm == sample_permutation_family(20, 3, 5).perm);
}

TEST_CASE("smallest nested instance") {
  auto nested = generate_nested_instance(8, 2, 2, 0);
  CHECK(nested.n == 8);
  CHECK(nested.ring_size == 4);
  CHECK(nested.instance.graph->edge_count() == 6);  // two squares minus one edge each
  CHECK(nesting_violation(nested) == "");
  for (const auto& d : nested.instance.drawings) CHECK(oracle::brute_planar(d));
  CHECK(drawings_isomorphic(nested.instance.drawings[0], nested.instance.drawings[1]));
  auto res = compatible_augment(nested.instance);
  CHECK(oracle::check_result(nested.instance, res) == "");
}

TEST_CASE("nested instances round their sizes and stay nested") {
  auto nested = generate_nested_instance(100, 7, 3, 4);
  CHECK(nested.requested_r == 7);
  CHECK(nested.r == 6);
  CHECK(nested.n == 96);
  CHECK(nesting_violation(nested) == "");
  CHECK(sampled_chord_misses(nested, 200, 1) == 0);
  for (std::size_t i = 1; i < nested.instance.drawings.size(); ++i) {
    CHECK(drawings_isomorphic(nested.instance.drawings[0], nested.instance.drawings[i]));
  }
  for (std::size_t i = 1; i < nested.radius.size(); ++i) CHECK(nested.radius[i - 1] < nested.radius[i]);
  CHECK_THROWS_AS(generate_nested_instance(8, 4, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_nested_instance(40, 4, 0, 0), std::invalid_argument);
}

TEST_CASE("a spread ring is caught") {
  auto nested = generate_nested_instance(48, 4, 2, 2);
  // Push the second ring far out: its chords no longer reach the first.
  for (auto& p : nested.ring[1]) p = Scalar(50) * p;
  CHECK(nesting_violation(nested) != "");
}

TEST_CASE("gap report and log-log fit") {
  auto nested = generate_nested_instance(40, 4, 2, 1);
  auto res = compatible_augment(nested.instance);
  auto gap = measure_lower_bound_gap(nested.instance, res);
  CHECK(gap.r == 4);
  CHECK(gap.envelope == doctest::Approx(80.0));
  CHECK(gap.ratio == doctest::Approx(res.added_vertex_count() / 80.0));

  const std::vector<double> x{1, 2, 4, 8}, y{3, 6 * std::sqrt(2.0) / 2, 6, 6 * std::sqrt(2.0)};
  auto fit = fit_loglog(x, y);
  CHECK(fit.slope == doctest::Approx(0.5));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3));
  const std::vector<double> flat{2, 2};
  CHECK_THROWS_AS(fit_loglog(flat, flat), std::invalid_argument);
}
