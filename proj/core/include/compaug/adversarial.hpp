// Hard instances: permutation families whose good indices are far from every
// other index in some coordinate, and nested-ring drawings built on them.
#pragma once

#include "compaug/augment.hpp"
#include "compaug/graph.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace compaug {

struct PermutationFamily {
  int r = 0;
  int k = 0;
  std::vector<std::vector<int>> perm;  // perm[s][i] in 0..r-1
  std::vector<int> good;               // indices far from all others
  int attempts = 1;                    // samples drawn until acceptance

  /// min over j != i of max_s |perm[s][i] - perm[s][j]|.
  int separation(int i) const;
  /// separation(i) >= t with t^k = (r-1)^(k-1) / 2^(k+1), decided in integers.
  bool is_good(int i) const;
  /// t as a double, for display.
  double threshold() const;
};

struct AdversarialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Resamples with seed-derived streams until at least ceil(r/2) indices are
/// good. Throws std::invalid_argument for r < 2 or k < 1 and AdversarialError
/// after 1000 attempts.
PermutationFamily sample_permutation_family(int r, int k, std::uint64_t seed);

struct NestedInstance {
  Instance instance;
  PermutationFamily family;
  int n = 0;          // after rounding down to a multiple of 2r
  int r = 0;          // after rounding down to an even number
  int ring_size = 0;  // n / r
  int requested_n = 0;
  int requested_r = 0;
  Scalar ratio;                           // consecutive radius ratio 1 + gamma
  std::vector<Scalar> radius;             // per ring, innermost first
  std::vector<std::vector<Point2>> ring;  // ring vertices, counterclockwise
};

/// r paths of n/r vertices on r nested convex rings. In drawing x, path i
/// lies on ring family.perm[x][i] minus one edge: the leftmost when the ring
/// number (counted from 1 at the centre) is even, else the rightmost. Throws
/// std::invalid_argument when the rounded sizes break 2 <= r <= n/4, and
/// AdversarialError when the nesting checks fail.
NestedInstance generate_nested_instance(int n, int r, int k, std::uint64_t seed);

/// Empty when ring i contains ring i-1 strictly and every chord of ring i
/// between non-adjacent vertices meets the interior of ring i-1, else a
/// description of the first failure. Exact: squared chord distances against
/// the squared inradius of the inner ring.
std::string nesting_violation(const NestedInstance& nested);

/// Predicate cross-check of the chord property on `samples` random chords
/// per ring. Returns the number of chords that miss the inner ring.
int sampled_chord_misses(const NestedInstance& nested, int samples, std::uint64_t seed);

struct GapReport {
  int n = 0, r = 0, k = 0;
  std::size_t added_vertices = 0;
  std::size_t added_edges = 0;
  double envelope = 0;  // n r^(1 - 1/k)
  double ratio = 0;     // added_vertices / envelope
};

GapReport measure_lower_bound_gap(const Instance& instance, const CompatibleResult& result);

struct LogLogFit {
  double slope = 0;
  double intercept = 0;  // log of the constant
};

/// Least squares fit of log y = slope log x + intercept. Needs two distinct
/// positive x values and positive y values.
LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y);

}  // namespace compaug
