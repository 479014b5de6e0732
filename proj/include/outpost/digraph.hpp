#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace outpost {

struct Arc {
  int tail;
  int head;
};

// Bare directed topology with CSR adjacency. Costs live outside so the same
// topology can be re-weighted (snapshots, budgets) without copying.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int node_count, std::vector<Arc> arcs);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(int e) const { return arcs_[e]; }
  std::span<const Arc> arcs() const { return arcs_; }

  // Arc ids leaving / entering v, ascending by id.
  std::span<const int> out_arcs(int v) const {
    return {out_ids_.data() + out_start_[v], out_ids_.data() + out_start_[v + 1]};
  }
  std::span<const int> in_arcs(int v) const {
    return {in_ids_.data() + in_start_[v], in_ids_.data() + in_start_[v + 1]};
  }

  // Returns the first node (lowest id) not mutually reachable with node 0,
  // or -1 when the graph is strongly connected.
  int first_not_strongly_connected() const;

  // Subgraph induced by `nodes` (given in any order). Node i of the result is
  // nodes[i]; `arc_map` receives, for each kept arc, its id in this graph.
  Digraph induced(std::span<const int> nodes, std::vector<int>* arc_map) const;

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<int> out_start_{0};
  std::vector<int> out_ids_;
  std::vector<int> in_start_{0};
  std::vector<int> in_ids_;
};

}  // namespace outpost
