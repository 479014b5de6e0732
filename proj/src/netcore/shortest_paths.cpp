#include "outpost/shortest_paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

#include "outpost/error.hpp"

namespace outpost {

OutpostSet::OutpostSet(std::vector<int> ids, int node_count)
    : ids_(std::move(ids)), node_count_(node_count) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
    throw Error(ErrorKind::kInvalidArgument, "outposts", "duplicate outpost id");
  }
  for (int v : ids_) {
    if (v < 0 || v >= node_count_) {
      throw Error(ErrorKind::kInvalidArgument, "node " + std::to_string(v),
                  "outpost id " + std::to_string(v) + " is not a network node");
    }
  }
}

OutpostSet OutpostSet::from_indicator(std::span<const char> indicator) {
  std::vector<int> ids;
  for (int v = 0; v < static_cast<int>(indicator.size()); ++v) {
    if (indicator[v]) ids.push_back(v);
  }
  return OutpostSet(std::move(ids), static_cast<int>(indicator.size()));
}

OutpostSet OutpostSet::all(int node_count) {
  std::vector<int> ids(node_count);
  for (int v = 0; v < node_count; ++v) ids[v] = v;
  return OutpostSet(std::move(ids), node_count);
}

bool OutpostSet::contains(int v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

std::vector<char> OutpostSet::indicator() const {
  std::vector<char> y(node_count_, 0);
  for (int v : ids_) y[v] = 1;
  return y;
}

ShortestPathTree multi_source_shortest_paths(const Digraph& g, std::span<const int> sources,
                                             std::span<const double> costs) {
  const int n = g.node_count();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  ShortestPathTree t;
  t.distance.assign(n, kInf);
  t.nearest_source.assign(n, -1);
  t.pred_arc.assign(n, -1);
  t.settle_order.reserve(n);

  // Heap order is (distance, source, node); relaxing along a non-negative arc
  // never produces a label that sorts before the settled one.
  using Label = std::tuple<double, int, int>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> heap;
  for (int s : sources) {
    if (t.distance[s] == 0.0 && t.nearest_source[s] <= s) continue;
    t.distance[s] = 0.0;
    t.nearest_source[s] = s;
    heap.emplace(0.0, s, s);
  }
  std::vector<char> settled(n, 0);
  while (!heap.empty()) {
    const auto [du, su, u] = heap.top();
    heap.pop();
    if (settled[u] || du != t.distance[u] || su != t.nearest_source[u]) continue;
    settled[u] = 1;
    t.settle_order.push_back(u);
    for (int e : g.out_arcs(u)) {
      const int v = g.arc(e).head;
      if (settled[v]) continue;
      const double dv = du + costs[e];
      bool better = dv < t.distance[v];
      if (!better && dv == t.distance[v]) {
        if (su < t.nearest_source[v]) {
          better = true;
        } else if (su == t.nearest_source[v]) {
          const int pv = g.arc(t.pred_arc[v]).tail;
          if (u < pv || (u == pv && e < t.pred_arc[v])) t.pred_arc[v] = e;
        }
      }
      if (better) {
        t.distance[v] = dv;
        t.nearest_source[v] = su;
        t.pred_arc[v] = e;
        heap.emplace(dv, su, v);
      }
    }
  }
  return t;
}

FlowVector tree_flows(const Digraph& g, const ShortestPathTree& tree,
                      std::span<const double> demand) {
  FlowVector f(g.arc_count(), 0.0);
  std::vector<double> carried(demand.begin(), demand.end());
  for (auto it = tree.settle_order.rbegin(); it != tree.settle_order.rend(); ++it) {
    const int v = *it;
    const int e = tree.pred_arc[v];
    if (e < 0) continue;
    f[e] += carried[v];
    carried[g.arc(e).tail] += carried[v];
  }
  return f;
}

std::vector<std::vector<double>> all_pairs_distances(const Digraph& g,
                                                     std::span<const double> costs) {
  std::vector<std::vector<double>> dist(g.node_count());
  for (int s = 0; s < g.node_count(); ++s) {
    const int src[] = {s};
    dist[s] = multi_source_shortest_paths(g, src, costs).distance;
  }
  return dist;
}

}  // namespace outpost
