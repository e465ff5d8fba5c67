#include "compaug/adversarial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace compaug {

int PermutationFamily::separation(int i) const {
  int best = r;
  for (int j = 0; j < r; ++j) {
    if (j == i) continue;
    int far = 0;
    for (const auto& p : perm) far = std::max(far, std::abs(p[i] - p[j]));
    best = std::min(best, far);
  }
  return best;
}

bool PermutationFamily::is_good(int i) const {
  // d >= t  <=>  d^k 2^(k+1) >= (r-1)^(k-1), both sides integers.
  mpz_class lhs, rhs;
  mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(separation(i)), static_cast<unsigned long>(k));
  lhs <<= static_cast<unsigned long>(k + 1);
  mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(r - 1), static_cast<unsigned long>(k - 1));
  return lhs >= rhs;
}

double PermutationFamily::threshold() const {
  return std::pow(0.5, 1.0 + 1.0 / k) * std::pow(r - 1.0, 1.0 - 1.0 / k);
}

PermutationFamily sample_permutation_family(int r, int k, std::uint64_t seed) {
  if (r < 2 || k < 1) throw std::invalid_argument("sample_permutation_family: need r >= 2 and k >= 1");
  PermutationFamily f;
  f.r = r;
  f.k = k;
  const int need = (r + 1) / 2;
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    f.perm.assign(k, std::vector<int>(r));
    for (auto& p : f.perm) {
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
    }
    f.good.clear();
    for (int i = 0; i < r; ++i) {
      if (f.is_good(i)) f.good.push_back(i);
    }
    f.attempts = attempt;
    if (static_cast<int>(f.good.size()) >= need) return f;
  }
  throw AdversarialError("sample_permutation_family: no family after 1000 attempts");
}

namespace {

// Rational points exactly on the unit circle at angles pi (2j + 1) / m,
// mirrored so the leftmost and rightmost edges are vertical.
std::vector<Point2> unit_ring(int m) {
  std::vector<Point2> upper;
  const double scale = 1 << 24;
  for (int j = 0; j < m / 2; ++j) {
    const double theta = std::numbers::pi * (2 * j + 1) / m;
    Scalar t(static_cast<long>(std::llround(std::tan(theta / 2) * scale)), static_cast<long>(scale));
    t.canonicalize();
    const Scalar d = 1 + t * t;
    upper.emplace_back(Scalar((1 - t * t) / d), Scalar(2 * t / d));
  }
  std::vector<Point2> ring = upper;
  for (int j = m / 2 - 1; j >= 0; --j) ring.emplace_back(upper[j].x, Scalar(-upper[j].y));
  return ring;
}

Scalar squared_inradius(const std::vector<Point2>& ring) {
  Scalar best = -1;
  for (std::size_t j = 0; j < ring.size(); ++j) {
    const Point2& p = ring[j];
    const Point2& q = ring[(j + 1) % ring.size()];
    const Scalar c = cross(p, q);
    const Scalar d = c * c / squared_distance(p, q);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

// Largest squared distance from the centre to a chord between non-adjacent
// vertices; the skip-one chords are the shortest, hence the farthest.
Scalar squared_chord_reach(const std::vector<Point2>& ring, const Scalar& radius) {
  Scalar shortest = -1;
  for (std::size_t j = 0; j < ring.size(); ++j) {
    const Scalar d = squared_distance(ring[j], ring[(j + 2) % ring.size()]);
    if (shortest < 0 || d < shortest) shortest = d;
  }
  return radius * radius - shortest / 4;
}

}  // namespace

std::string nesting_violation(const NestedInstance& nested) {
  const int m = nested.ring_size;
  for (std::size_t i = 0; i < nested.ring.size(); ++i) {
    const auto& ring = nested.ring[i];
    if (static_cast<int>(ring.size()) != m) return "ring " + std::to_string(i) + " has the wrong size";
    const Scalar r2 = nested.radius[i] * nested.radius[i];
    for (const auto& p : ring) {
      if (p.x * p.x + p.y * p.y != r2) return "ring " + std::to_string(i) + " leaves its circle";
    }
    for (int j = 0; j < m; ++j) {
      if (orient(ring[j], ring[(j + 1) % m], ring[(j + 2) % m]) <= 0) {
        return "ring " + std::to_string(i) + " is not strictly convex";
      }
    }
    if (i == 0) continue;
    const auto& inner = nested.ring[i - 1];
    const Scalar inner_r2 = nested.radius[i - 1] * nested.radius[i - 1];
    if (!(inner_r2 < squared_inradius(ring))) {
      return "ring " + std::to_string(i) + " does not contain ring " + std::to_string(i - 1);
    }
    if (!(squared_chord_reach(ring, nested.radius[i]) < squared_inradius(inner))) {
      return "a chord of ring " + std::to_string(i) + " misses ring " + std::to_string(i - 1);
    }
  }
  return {};
}

int sampled_chord_misses(const NestedInstance& nested, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int m = nested.ring_size;
  std::uniform_int_distribution<int> vertex(0, m - 1), skip(2, m - 2);
  int misses = 0;
  for (std::size_t i = 1; i < nested.ring.size(); ++i) {
    for (int s = 0; s < samples; ++s) {
      const int a = vertex(rng), b = (a + skip(rng)) % m;
      Segment chord{nested.ring[i][a], nested.ring[i][b]};
      if (!segment_meets_convex_interior(chord, nested.ring[i - 1])) ++misses;
    }
  }
  return misses;
}

NestedInstance generate_nested_instance(int n, int r, int k, std::uint64_t seed) {
  NestedInstance out;
  out.requested_n = n;
  out.requested_r = r;
  r -= r % 2;
  if (r >= 2) n -= n % (2 * r);
  if (k < 1 || r < 2 || 4 * r > n) {
    throw std::invalid_argument("generate_nested_instance: need k >= 1 and 2 <= r <= n/4 after rounding");
  }
  const int m = n / r;
  out.n = n;
  out.r = r;
  out.ring_size = m;
  out.family = sample_permutation_family(r, k, seed);

  // Radii grow geometrically by 1 + gamma: containment needs the ratio above
  // 1/inradius, the chord property needs it below inradius/chord reach.
  const std::vector<Point2> unit = unit_ring(m);
  const Scalar s = squared_inradius(unit), c = squared_chord_reach(unit, 1);
  Scalar gamma(1, 2);
  while ((1 + gamma) * (1 + gamma) * c >= s) gamma /= 2;
  out.ratio = 1 + gamma;
  if (!(out.ratio * out.ratio * s > 1)) {
    throw AdversarialError("generate_nested_instance: no power-of-two ratio fits ring size " + std::to_string(m));
  }
  // Integer radii keep the coordinates small; rounding up by less than one
  // unit stays inside the window at this scale.
  mpz_class radius = mpz_class(1) << 30;
  for (int i = 0; i < r; ++i) {
    out.radius.emplace_back(radius);
    std::vector<Point2> ring;
    for (const auto& p : unit) ring.emplace_back(Scalar(p.x * out.radius.back()), Scalar(p.y * out.radius.back()));
    out.ring.push_back(std::move(ring));
    const Scalar next = out.radius.back() * out.ratio;
    mpz_cdiv_q(radius.get_mpz_t(), next.get_num_mpz_t(), next.get_den_mpz_t());
  }
  if (auto why = nesting_violation(out); !why.empty()) throw AdversarialError("generate_nested_instance: " + why);

  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j + 1 < m; ++j) edges.emplace_back(i * m + j, i * m + j + 1);
  }
  auto graph = std::make_shared<const LabelledGraph>(LabelledGraph::from_labels(labels, edges));
  out.instance.graph = graph;
  for (int x = 0; x < k; ++x) {
    PlanarDrawing d;
    d.graph = graph;
    d.name = "drawing " + std::to_string(x);
    d.position.resize(n);
    for (int i = 0; i < r; ++i) {
      const int y = out.family.perm[x][i];
      // Ring number y + 1 even: the path starts just below the leftmost edge.
      const int start = (y + 1) % 2 == 0 ? m / 2 : 0;
      for (int j = 0; j < m; ++j) d.position[graph->index_of(i * m + j)] = out.ring[y][(start + j) % m];
    }
    out.instance.drawings.push_back(std::move(d));
  }
  return out;
}

GapReport measure_lower_bound_gap(const Instance& instance, const CompatibleResult& result) {
  GapReport g;
  g.n = static_cast<int>(instance.graph->vertex_count());
  g.r = static_cast<int>(instance.graph->components().size());
  g.k = static_cast<int>(instance.drawings.size());
  g.added_vertices = result.added_vertex_count();
  g.added_edges = result.added_edge_count();
  g.envelope = g.n * std::pow(static_cast<double>(g.r), 1.0 - 1.0 / g.k);
  g.ratio = g.envelope > 0 ? static_cast<double>(g.added_vertices) / g.envelope : 0.0;
  return g;
}

LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_loglog: need two or more pairs");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("fit_loglog: values must be positive");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double cnt = static_cast<double>(x.size());
  const double den = cnt * sxx - sx * sx;
  if (den <= 0) throw std::invalid_argument("fit_loglog: x values must differ");
  LogLogFit f;
  f.slope = (cnt * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / cnt;
  return f;
}

}  // namespace compaug
