#pragma once

#include <span>
#include <utility>
#include <vector>

#include "outpost/digraph.hpp"
#include "outpost/outposts.hpp"

namespace outpost {

// Single-commodity transport network for one (outposts, demand) pair:
//   source -> each outpost      capacity = total demand, cost 0
//   road arc e                  capacity = uniform cap t, cost c_e
//   node v -> sink              capacity = d_v, cost 0
// Delivering the full demand from source to sink is exactly the routing
// polytope A f <= alpha*y - d with alpha = total demand.
class TransportNetwork {
 public:
  TransportNetwork(const Digraph& g, std::span<const double> costs, std::span<const int> outposts,
                   std::span<const double> demand);

  double total_demand() const { return total_demand_; }

  // True when every node with positive demand is reachable from an outpost.
  bool routable() const { return routable_; }

  struct CappedFlow {
    bool feasible = false;
    double cost = 0.0;
    std::vector<double> flows;  // per road arc
    // A subgradient of cost(t) at this cap: minus the sum of the capacity
    // duals of the saturated road arcs under optimal potentials.
    double cap_slope = 0.0;
  };

  // Min-cost delivery with every road arc capped at `cap`, by successive
  // shortest paths with Johnson potentials.
  CappedFlow min_cost_flow(double cap);

  // Smallest uniform cap admitting full delivery (Newton iteration on the
  // max-flow min cut); +inf when demand is unroutable.
  double min_feasible_cap();

 private:
  struct ResidualArc {
    int to;
    double cap;
    double cost;
    double flow;
  };

  void set_road_caps(double cap);
  void reset_flows();
  double max_flow();
  std::vector<char> source_side() const;
  bool augment_shortest_path(double& remaining);
  double push_path(int u, double limit);
  void add_arc(int from, int to, double cap, double cost);
  double residual(int a) const { return arcs_[a].cap - arcs_[a].flow; }

  int road_arcs_ = 0;
  int node_count_ = 0;  // including source and sink
  int source_ = 0;
  int sink_ = 0;
  double total_demand_ = 0.0;
  double tiny_ = 0.0;
  bool routable_ = true;

  std::vector<ResidualArc> arcs_;  // arcs 2i / 2i+1 are forward / reverse
  std::vector<int> arc_tail_;
  std::vector<std::vector<int>> adj_;
  std::vector<double> potential_;
  std::vector<double> dist_;
  std::vector<int> parent_;
  std::vector<char> done_;
  std::vector<std::pair<double, int>> heap_;
  std::vector<int> queue_;
  std::vector<int> level_;
  std::vector<std::size_t> next_arc_;
};

}  // namespace outpost
