#pragma once

// Brute-force reference computations for tests. Everything here is
// deliberately naive and independent of the library's algorithms.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "lp_oracle.hpp"
#include "outpost/network.hpp"

namespace outpost::testing {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest s -> t cost by enumerating every simple path (DFS).
inline std::vector<double> path_enumeration_distances(const RoadNetwork& net, int s,
                                                      std::span<const double> costs) {
  const int n = net.node_count();
  std::vector<double> best(n, kInf);
  std::vector<char> on_path(n, 0);
  std::function<void(int, double)> dfs = [&](int v, double len) {
    best[v] = std::min(best[v], len);
    on_path[v] = 1;
    for (int e = 0; e < net.edge_count(); ++e) {
      const auto& edge = net.edge(e);
      if (edge.tail == v && !on_path[edge.head]) dfs(edge.head, len + costs[e]);
    }
    on_path[v] = 0;
  };
  dfs(s, 0.0);
  return best;
}

inline std::vector<std::vector<double>> floyd_warshall(const RoadNetwork& net,
                                                       std::span<const double> costs) {
  const int n = net.node_count();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0.0;
  for (int e = 0; e < net.edge_count(); ++e) {
    const auto& edge = net.edge(e);
    d[edge.tail][edge.head] = std::min(d[edge.tail][edge.head], costs[e]);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Calls fn(subset) for every size-p subset of {0..n-1} in lexicographic order.
inline void for_each_subset(int n, int p, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> s(p);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    fn(s);
    int i = p - 1;
    while (i >= 0 && s[i] == n - p + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
  }
}

// min over facility sets of sum_j d_j min_i t_ij
inline double pmedian_enumeration(const std::vector<std::vector<double>>& t,
                                  std::span<const double> demand, int p) {
  const int n = static_cast<int>(t.size());
  double best = kInf;
  for_each_subset(n, p, [&](const std::vector<int>& s) {
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      double m = kInf;
      for (int i : s) m = std::min(m, t[i][j]);
      total += demand[j] * m;
    }
    best = std::min(best, total);
  });
  return best;
}

// The routing program written out as a generic LP:
//   total:    min c'f + B*lam  s.t.  A f <= alpha*y - d,  f - lam <= 0
//   per-edge: min (c+B)'f      s.t.  A f <= alpha*y - d
// with A(+1 at tail, -1 at head) and alpha = sum(d).
inline LpResult routing_lp(const RoadNetwork& net, std::span<const double> costs,
                           const std::vector<int>& outposts, std::span<const double> demand,
                           double budget, bool total_mode) {
  const int n = net.node_count();
  const int m = net.edge_count();
  const double alpha = std::accumulate(demand.begin(), demand.end(), 0.0);
  const int vars = total_mode ? m + 1 : m;
  std::vector<double> c(vars, 0.0);
  for (int e = 0; e < m; ++e) c[e] = costs[e] + (total_mode ? 0.0 : budget);
  if (total_mode) c[m] = budget;
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (int v = 0; v < n; ++v) {
    std::vector<double> row(vars, 0.0);
    for (int e = 0; e < m; ++e) {
      if (net.edge(e).tail == v) row[e] += 1.0;
      if (net.edge(e).head == v) row[e] -= 1.0;
    }
    const bool open = std::find(outposts.begin(), outposts.end(), v) != outposts.end();
    a.push_back(std::move(row));
    b.push_back((open ? alpha : 0.0) - demand[v]);
  }
  if (total_mode) {
    for (int e = 0; e < m; ++e) {
      std::vector<double> row(vars, 0.0);
      row[e] = 1.0;
      row[m] = -1.0;
      a.push_back(std::move(row));
      b.push_back(0.0);
    }
  }
  return solve_lp_min(c, a, b);
}

}  // namespace outpost::testing
