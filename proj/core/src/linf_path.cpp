#include "compaug/linf_path.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace compaug {

Scalar SpanningPath::total() const {
  Scalar sum = 0;
  for (const auto& h : hop_lengths) sum += h;
  return sum;
}

Scalar linf_distance(const GridPoint& a, const GridPoint& b) {
  if (a.coords.size() != b.coords.size()) {
    throw std::invalid_argument("linf_distance: dimension mismatch");
  }
  Scalar best = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    Scalar d = abs(a.coords[i] - b.coords[i]);
    if (best < d) best = d;
  }
  return best;
}

std::vector<std::pair<int, int>> greedy_spanning_tree(std::span<const GridPoint> points) {
  const int r = static_cast<int>(points.size());
  std::vector<std::pair<int, int>> tree;
  if (r <= 1) return tree;
  for (const auto& p : points) {
    if (p.coords.size() != points[0].coords.size()) {
      throw std::invalid_argument("greedy_spanning_tree: dimension mismatch");
    }
  }

  std::vector<char> active(r, 1);
  std::vector<int> nn(r, -1);
  std::vector<Scalar> nnd(r);
  auto key = [&](int i, int j, const Scalar& d) {
    int a = points[i].label, b = points[j].label;
    return std::make_tuple(std::cref(d), std::min(a, b), std::max(a, b));
  };
  auto refresh = [&](int i) {
    nn[i] = -1;
    for (int j = 0; j < r; ++j) {
      if (j == i || !active[j]) continue;
      Scalar d = linf_distance(points[i], points[j]);
      if (nn[i] < 0 || key(i, j, d) < key(i, nn[i], nnd[i])) {
        nn[i] = j;
        nnd[i] = std::move(d);
      }
    }
  };
  for (int i = 0; i < r; ++i) refresh(i);

  for (int remaining = r; remaining > 1; --remaining) {
    int best = -1;
    for (int i = 0; i < r; ++i) {
      if (!active[i]) continue;
      if (best < 0 || key(i, nn[i], nnd[i]) < key(best, nn[best], nnd[best])) best = i;
    }
    int other = nn[best];
    int retired = points[best].label < points[other].label ? best : other;
    int kept = retired == best ? other : best;
    tree.emplace_back(std::min(kept, retired), std::max(kept, retired));
    active[retired] = 0;
    for (int i = 0; i < r; ++i) {
      if (active[i] && nn[i] == retired) refresh(i);
    }
  }
  return tree;
}

namespace {

SpanningPath path_from_order(const std::vector<int>& idx, std::span<const GridPoint> points) {
  SpanningPath path;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    path.order.push_back(points[idx[i]].label);
    if (i > 0) path.hop_lengths.push_back(linf_distance(points[idx[i - 1]], points[idx[i]]));
  }
  return path;
}

}  // namespace

SpanningPath tree_to_path(const std::vector<std::pair<int, int>>& tree,
                          std::span<const GridPoint> points) {
  const int r = static_cast<int>(points.size());
  if (r == 0) return {};
  std::vector<std::vector<int>> adj(r);
  for (auto [a, b] : tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto by_label = [&](int a, int b) { return points[a].label < points[b].label; };
  for (auto& list : adj) std::sort(list.begin(), list.end(), by_label);
  int root = 0;
  for (int i = 1; i < r; ++i) {
    if (by_label(i, root)) root = i;
  }

  std::vector<int> order;
  std::vector<char> seen(r, 0);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    order.push_back(v);
    for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it) {
      if (!seen[*it]) stack.push_back(*it);
    }
  }
  if (static_cast<int>(order.size()) != r) {
    throw std::invalid_argument("tree_to_path: tree does not span the points");
  }
  return path_from_order(order, points);
}

SpanningPath spanning_path(std::span<const GridPoint> points) {
  return tree_to_path(greedy_spanning_tree(points), points);
}

SpanningPath improve_path(const SpanningPath& path, std::span<const GridPoint> points) {
  const int r = static_cast<int>(path.order.size());
  if (r < 3) return path;
  std::vector<int> at(r);  // path position -> index into points
  for (int i = 0; i < r; ++i) {
    auto it = std::find_if(points.begin(), points.end(), [&](const GridPoint& g) { return g.label == path.order[i]; });
    if (it == points.end()) throw std::invalid_argument("improve_path: unknown label");
    at[i] = static_cast<int>(it - points.begin());
  }
  // Doubles only steer the search; the result is compared exactly below.
  const int np = static_cast<int>(points.size());
  std::vector<double> dist(static_cast<std::size_t>(np) * np);
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) dist[i * np + j] = dist[j * np + i] = linf_distance(points[i], points[j]).get_d();
  auto d = [&](int a, int b) { return dist[at[a] * np + at[b]]; };
  constexpr double kGain = 1e-9;

  for (int round = 0; round < 1000; ++round) {
    bool changed = false;
    // 2-opt: reversing positions i+1..j replaces the hops (i, i+1) and
    // (j, j+1); at the ends of the path only one hop changes.
    for (int i = -1; i + 2 < r; ++i) {
      for (int j = i + 2; j < r; ++j) {
        if (i < 0 && j == r - 1) continue;
        double gain = 0;
        if (i >= 0) gain += d(i, i + 1) - d(i, j);
        if (j + 1 < r) gain += d(j, j + 1) - d(i + 1, j + 1);
        if (gain > kGain) {
          std::reverse(at.begin() + i + 1, at.begin() + j + 1);
          changed = true;
        }
      }
    }
    // Or-opt: move a stretch a..b of up to three points, either way round,
    // between positions p and p + 1 (p = -1: in front).
    for (int len = 1; len <= 3; ++len) {
      for (int a = 0; a + len <= r; ++a) {
        const int b = a + len - 1;
        double cut = 0;
        if (a > 0) cut += d(a - 1, a);
        if (b + 1 < r) cut += d(b, b + 1);
        if (a > 0 && b + 1 < r) cut -= d(a - 1, b + 1);
        int best_p = -2;
        bool best_flip = false;
        double best = cut - kGain;
        for (int p = -1; p < r; ++p) {
          if (p >= a - 1 && p <= b) continue;
          const int q = p + 1;
          for (bool flip : {false, true}) {
            const int head = flip ? b : a, tail = flip ? a : b;
            double add = 0;
            if (p >= 0) add += d(p, head);
            if (q < r) add += d(tail, q);
            if (p >= 0 && q < r) add -= d(p, q);
            if (add < best) {
              best = add;
              best_p = p;
              best_flip = flip;
            }
          }
        }
        if (best_p == -2) continue;
        std::vector<int> seg(at.begin() + a, at.begin() + b + 1);
        if (best_flip) std::reverse(seg.begin(), seg.end());
        std::vector<int> moved;
        moved.reserve(r);
        for (int i = 0; i < r; ++i) {
          if (i >= a && i <= b) continue;
          if (i == best_p + 1 && best_p < a) moved.insert(moved.end(), seg.begin(), seg.end());
          moved.push_back(at[i]);
          if (i == best_p && best_p > b) moved.insert(moved.end(), seg.begin(), seg.end());
        }
        at = std::move(moved);
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<int> idx(at.begin(), at.end());
  SpanningPath better = path_from_order(idx, points);
  return better.total() <= path.total() ? better : path;
}

SpanningPath exhaustive_shortest_path(std::span<const GridPoint> points) {
  const int r = static_cast<int>(points.size());
  if (r > 12) throw std::invalid_argument("exhaustive_shortest_path: too many points");
  if (r == 0) return {};
  const int full = 1 << r;
  std::vector<std::vector<Scalar>> dist(r, std::vector<Scalar>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) dist[i][j] = linf_distance(points[i], points[j]);

  // best[mask][last]: shortest path covering mask and ending at last.
  std::vector<std::vector<Scalar>> best(full, std::vector<Scalar>(r));
  std::vector<std::vector<int>> from(full, std::vector<int>(r, -2));
  for (int i = 0; i < r; ++i) {
    best[1 << i][i] = 0;
    from[1 << i][i] = -1;
  }
  for (int mask = 1; mask < full; ++mask) {
    for (int last = 0; last < r; ++last) {
      if (from[mask][last] == -2) continue;
      for (int nxt = 0; nxt < r; ++nxt) {
        if (mask & (1 << nxt)) continue;
        int m2 = mask | (1 << nxt);
        Scalar cand = best[mask][last] + dist[last][nxt];
        if (from[m2][nxt] == -2 || cand < best[m2][nxt]) {
          best[m2][nxt] = cand;
          from[m2][nxt] = last;
        }
      }
    }
  }
  int end = 0;
  for (int i = 1; i < r; ++i) {
    if (best[full - 1][i] < best[full - 1][end]) end = i;
  }
  std::vector<int> order;
  for (int mask = full - 1, v = end; v >= 0;) {
    order.push_back(v);
    int prev = from[mask][v];
    mask &= ~(1 << v);
    v = prev;
  }
  std::reverse(order.begin(), order.end());
  return path_from_order(order, points);
}

Scalar tree_length(const std::vector<std::pair<int, int>>& tree,
                   std::span<const GridPoint> points) {
  Scalar sum = 0;
  for (auto [a, b] : tree) sum += linf_distance(points[a], points[b]);
  return sum;
}

}  // namespace compaug
