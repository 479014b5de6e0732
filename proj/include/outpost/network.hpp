#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "outpost/digraph.hpp"

namespace outpost {

struct NetworkNode {
  int id = 0;
  double x = 0.0;  // meters
  double y = 0.0;  // meters
  int ward = -1;
};

struct NetworkEdge {
  int tail = 0;
  int head = 0;
  double base_cost = 0.0;  // seconds
};

// Directed road network with baseline travel times. Immutable once built;
// the constructor enforces contiguous ids, valid endpoints, finite
// non-negative costs and strong connectivity.
class RoadNetwork {
 public:
  RoadNetwork(std::vector<NetworkNode> nodes, std::vector<NetworkEdge> edges);

  int node_count() const { return graph_.node_count(); }
  int edge_count() const { return graph_.arc_count(); }
  const Digraph& graph() const { return graph_; }
  std::span<const NetworkNode> nodes() const { return nodes_; }
  const NetworkNode& node(int v) const { return nodes_[v]; }
  const NetworkEdge& edge(int e) const { return edges_[e]; }
  std::span<const NetworkEdge> edges() const { return edges_; }
  std::span<const double> base_costs() const { return base_costs_; }

  // Same topology and nodes with a different baseline cost vector.
  RoadNetwork with_costs(std::span<const double> costs) const;

 private:
  std::vector<NetworkNode> nodes_;
  std::vector<NetworkEdge> edges_;
  std::vector<double> base_costs_;
  Digraph graph_;
};

// Network JSON:
//   {"nodes":[{"id":0,"x":0.0,"y":0.0,"ward":3}, ...],
//    "edges":[{"u":0,"v":1,"cost_s":12.5}, ...],
//    "undirected": false}
// With "undirected": true every edge is expanded into two antiparallel arcs
// (u->v gets id 2i, v->u gets id 2i+1).
RoadNetwork parse_network(const nlohmann::json& doc);
RoadNetwork parse_network(std::string_view text);
RoadNetwork load_network(const std::filesystem::path& path);
nlohmann::json to_json(const RoadNetwork& net);
void save_network(const RoadNetwork& net, const std::filesystem::path& path);

struct RandomNetworkOptions {
  double extent_m = 5000.0;
  double min_speed_mps = 4.0;
  double max_speed_mps = 12.0;
  int wards = 4;  // wards laid out as vertical strips
};

// Strongly connected random network: a random Hamiltonian cycle plus extra
// random arcs between nearby nodes. Costs are Euclidean length over a random
// speed. Reproducible for a given seed.
RoadNetwork random_network(int nodes, int edges, std::uint64_t seed,
                           const RandomNetworkOptions& opts = {});

}  // namespace outpost
