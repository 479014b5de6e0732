#pragma once

#include <span>
#include <vector>

#include "outpost/digraph.hpp"
#include "outpost/outposts.hpp"

namespace outpost {

struct ShortestPathTree {
  std::vector<double> distance;     // seconds; +inf when unreachable
  std::vector<int> nearest_source;  // -1 when unreachable
  std::vector<int> pred_arc;        // -1 for sources and unreachable nodes
  std::vector<int> settle_order;    // reachable nodes in non-decreasing distance
};

// Label-setting shortest paths from a set of sources. Ties on distance go to
// the lowest source id, then the lowest predecessor node, then the lowest
// arc id, so the tree is deterministic.
ShortestPathTree multi_source_shortest_paths(const Digraph& g, std::span<const int> sources,
                                             std::span<const double> costs);

// Routes every node's demand to its tree source along the tree. Nodes not
// reached by the tree must carry zero demand.
FlowVector tree_flows(const Digraph& g, const ShortestPathTree& tree,
                      std::span<const double> demand);

// dist[i][j] = shortest i -> j travel time; dist[i][i] = 0.
std::vector<std::vector<double>> all_pairs_distances(const Digraph& g,
                                                     std::span<const double> costs);

}  // namespace outpost
