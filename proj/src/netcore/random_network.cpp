#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "outpost/error.hpp"
#include "outpost/network.hpp"

namespace outpost {

RoadNetwork random_network(int nodes, int edges, std::uint64_t seed,
                           const RandomNetworkOptions& opts) {
  if (nodes < 2) throw Error(ErrorKind::kInvalidArgument, "nodes", "need at least 2 nodes");
  if (edges < nodes || static_cast<long long>(edges) > 1LL * nodes * (nodes - 1)) {
    throw Error(ErrorKind::kInvalidArgument, "edges",
                "edge count must lie in [nodes, nodes*(nodes-1)], got " + std::to_string(edges));
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, opts.extent_m);
  std::uniform_real_distribution<double> speed(opts.min_speed_mps, opts.max_speed_mps);

  std::vector<NetworkNode> pts(nodes);
  const int wards = std::max(1, opts.wards);
  for (int v = 0; v < nodes; ++v) {
    pts[v].id = v;
    pts[v].x = coord(rng);
    pts[v].y = coord(rng);
    pts[v].ward = std::min(wards - 1, static_cast<int>(pts[v].x / opts.extent_m * wards));
  }
  auto travel = [&](int u, int v) {
    const double len = std::hypot(pts[u].x - pts[v].x, pts[u].y - pts[v].y);
    return std::max(1.0, std::round(len / speed(rng) * 10.0) / 10.0);
  };

  std::vector<int> order(nodes);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);

  std::set<std::pair<int, int>> used;
  std::vector<NetworkEdge> out;
  out.reserve(edges);
  for (int i = 0; i < nodes; ++i) {
    const int u = order[i];
    const int v = order[(i + 1) % nodes];
    used.insert({u, v});
    out.push_back({u, v, travel(u, v)});
  }

  // Extra arcs favour near neighbours so the network looks road-like.
  std::vector<std::vector<int>> by_distance(nodes);
  for (int u = 0; u < nodes; ++u) {
    auto& list = by_distance[u];
    for (int v = 0; v < nodes; ++v) {
      if (v != u) list.push_back(v);
    }
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      const double da = std::hypot(pts[u].x - pts[a].x, pts[u].y - pts[a].y);
      const double db = std::hypot(pts[u].x - pts[b].x, pts[u].y - pts[b].y);
      return da < db || (da == db && a < b);
    });
  }
  std::uniform_int_distribution<int> pick_node(0, nodes - 1);
  int window = std::min(nodes - 1, 6);
  int misses = 0;
  while (static_cast<int>(out.size()) < edges) {
    const int u = pick_node(rng);
    std::uniform_int_distribution<int> pick_rank(0, window - 1);
    const int v = by_distance[u][pick_rank(rng)];
    if (used.insert({u, v}).second) {
      out.push_back({u, v, travel(u, v)});
      misses = 0;
    } else if (++misses > 4 * nodes) {
      window = std::min(nodes - 1, window * 2);
      misses = 0;
    }
  }
  return RoadNetwork(std::move(pts), std::move(out));
}

}  // namespace outpost
