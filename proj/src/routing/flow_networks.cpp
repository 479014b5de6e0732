#include <algorithm>
#include <cmath>
#include <limits>

#include "outpost/transport.hpp"

namespace outpost {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TransportNetwork::TransportNetwork(const Digraph& g, std::span<const double> costs,
                                   std::span<const int> outposts, std::span<const double> demand) {
  const int n = g.node_count();
  node_count_ = n + 2;
  source_ = n;
  sink_ = n + 1;
  road_arcs_ = g.arc_count();
  for (double d : demand) total_demand_ += d;
  tiny_ = 1e-12 * std::max(1.0, total_demand_);

  adj_.assign(node_count_, {});
  arcs_.reserve(2 * (road_arcs_ + outposts.size() + n));
  arc_tail_.reserve(arcs_.capacity());
  for (int e = 0; e < road_arcs_; ++e) add_arc(g.arc(e).tail, g.arc(e).head, 0.0, costs[e]);
  for (int s : outposts) add_arc(source_, s, total_demand_, 0.0);
  for (int v = 0; v < n; ++v) {
    if (demand[v] > 0.0) add_arc(v, sink_, demand[v], 0.0);
  }

  std::vector<char> seen(n, 0);
  std::vector<int> stack(outposts.begin(), outposts.end());
  for (int s : outposts) seen[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e : g.out_arcs(u)) {
      const int v = g.arc(e).head;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (demand[v] > 0.0 && !seen[v]) routable_ = false;
  }

  potential_.assign(node_count_, 0.0);
  dist_.assign(node_count_, kInf);
  parent_.assign(node_count_, -1);
  level_.assign(node_count_, -1);
  next_arc_.assign(node_count_, 0);
}

void TransportNetwork::add_arc(int from, int to, double cap, double cost) {
  adj_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap, cost, 0.0});
  arc_tail_.push_back(from);
  adj_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0.0, -cost, 0.0});
  arc_tail_.push_back(to);
}

void TransportNetwork::set_road_caps(double cap) {
  for (int e = 0; e < road_arcs_; ++e) arcs_[2 * e].cap = cap;
}

void TransportNetwork::reset_flows() {
  for (auto& a : arcs_) a.flow = 0.0;
}

bool TransportNetwork::augment_shortest_path(double& remaining) {
  std::fill(dist_.begin(), dist_.end(), kInf);
  std::fill(parent_.begin(), parent_.end(), -1);
  done_.assign(node_count_, 0);
  heap_.clear();
  dist_[source_] = 0.0;
  heap_.emplace_back(0.0, source_);
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
    const auto [du, u] = heap_.back();
    heap_.pop_back();
    if (done_[u]) continue;
    done_[u] = 1;
    if (u == sink_) break;
    for (int a : adj_[u]) {
      if (residual(a) <= tiny_) continue;
      const int v = arcs_[a].to;
      if (done_[v]) continue;
      const double rc = std::max(0.0, arcs_[a].cost + potential_[u] - potential_[v]);
      if (du + rc < dist_[v]) {
        dist_[v] = du + rc;
        parent_[v] = a;
        heap_.emplace_back(dist_[v], v);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
      }
    }
  }
  if (!done_[sink_]) return false;

  const double to_sink = dist_[sink_];
  for (int v = 0; v < node_count_; ++v) potential_[v] += std::min(dist_[v], to_sink);
  double push = remaining;
  for (int v = sink_; v != source_; v = arc_tail_[parent_[v]]) {
    push = std::min(push, residual(parent_[v]));
  }
  for (int v = sink_; v != source_; v = arc_tail_[parent_[v]]) {
    const int a = parent_[v];
    arcs_[a].flow += push;
    arcs_[a ^ 1].flow -= push;
  }
  remaining -= push;
  return true;
}

TransportNetwork::CappedFlow TransportNetwork::min_cost_flow(double cap) {
  CappedFlow out;
  reset_flows();
  set_road_caps(cap);
  std::fill(potential_.begin(), potential_.end(), 0.0);
  double remaining = total_demand_;
  const double done_at = 1e-10 * std::max(1.0, total_demand_);
  while (remaining > done_at) {
    if (!augment_shortest_path(remaining)) return out;
  }
  out.feasible = true;
  out.flows.resize(road_arcs_);
  for (int e = 0; e < road_arcs_; ++e) {
    const auto& a = arcs_[2 * e];
    out.flows[e] = std::max(0.0, a.flow);
    out.cost += a.cost * out.flows[e];
    if (residual(2 * e) <= tiny_) {
      const double rc = a.cost + potential_[arc_tail_[2 * e]] - potential_[a.to];
      if (rc < 0.0) out.cap_slope += rc;
    }
  }
  return out;
}

double TransportNetwork::push_path(int u, double limit) {
  if (u == sink_) return limit;
  for (; next_arc_[u] < adj_[u].size(); ++next_arc_[u]) {
    const int a = adj_[u][next_arc_[u]];
    const int v = arcs_[a].to;
    if (level_[v] != level_[u] + 1 || residual(a) <= tiny_) continue;
    const double got = push_path(v, std::min(limit, residual(a)));
    if (got > 0.0) {
      arcs_[a].flow += got;
      arcs_[a ^ 1].flow -= got;
      return got;
    }
  }
  return 0.0;
}

// Dinic.
double TransportNetwork::max_flow() {
  double total = 0.0;
  for (;;) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.assign(1, source_);
    level_[source_] = 0;
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      const int u = queue_[h];
      for (int a : adj_[u]) {
        if (level_[arcs_[a].to] < 0 && residual(a) > tiny_) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue_.push_back(arcs_[a].to);
        }
      }
    }
    if (level_[sink_] < 0) break;
    std::fill(next_arc_.begin(), next_arc_.end(), 0);
    for (;;) {
      const double got = push_path(source_, kInf);
      if (got <= 0.0) break;
      total += got;
    }
  }
  return total;
}

std::vector<char> TransportNetwork::source_side() const {
  std::vector<char> side(node_count_, 0);
  std::vector<int> stack{source_};
  side[source_] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int a : adj_[u]) {
      const int v = arcs_[a].to;
      if (!side[v] && residual(a) > tiny_) {
        side[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return side;
}

double TransportNetwork::min_feasible_cap() {
  if (!routable_) return kInf;
  const double target = total_demand_ - 1e-10 * std::max(1.0, total_demand_);
  double cap = 0.0;
  for (int iter = 0; iter < 500; ++iter) {
    reset_flows();
    set_road_caps(cap);
    if (max_flow() >= target) return cap;
    // The min cut is linear in the cap: k * cap + fixed. Jump to the cap
    // where that cut alone would carry the full demand.
    const auto side = source_side();
    int crossing_roads = 0;
    double fixed = 0.0;
    for (int a = 0; a < static_cast<int>(arcs_.size()); a += 2) {
      if (!side[arc_tail_[a]] || side[arcs_[a].to]) continue;
      if (a < 2 * road_arcs_) {
        ++crossing_roads;
      } else {
        fixed += arcs_[a].cap;
      }
    }
    if (crossing_roads == 0) return kInf;
    const double next = (total_demand_ - fixed) / crossing_roads;
    cap = next > cap ? next : std::nextafter(cap, kInf) * (1.0 + 1e-12);
  }
  return cap;
}

}  // namespace outpost
