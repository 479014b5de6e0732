#include "outpost/digraph.hpp"

#include <algorithm>

namespace outpost {

namespace {

std::vector<int> reach(const Digraph& g, bool forward) {
  std::vector<int> seen(g.node_count(), 0);
  if (g.node_count() == 0) return seen;
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : forward ? g.out_arcs(v) : g.in_arcs(v)) {
      const int w = forward ? g.arc(e).head : g.arc(e).tail;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

Digraph::Digraph(int node_count, std::vector<Arc> arcs)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  out_start_.assign(node_count_ + 1, 0);
  in_start_.assign(node_count_ + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_start_[a.tail + 1];
    ++in_start_[a.head + 1];
  }
  for (int v = 0; v < node_count_; ++v) {
    out_start_[v + 1] += out_start_[v];
    in_start_[v + 1] += in_start_[v];
  }
  out_ids_.resize(arcs_.size());
  in_ids_.resize(arcs_.size());
  std::vector<int> out_fill(out_start_.begin(), out_start_.end() - 1);
  std::vector<int> in_fill(in_start_.begin(), in_start_.end() - 1);
  for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
    out_ids_[out_fill[arcs_[e].tail]++] = e;
    in_ids_[in_fill[arcs_[e].head]++] = e;
  }
}

int Digraph::first_not_strongly_connected() const {
  const auto fwd = reach(*this, true);
  const auto bwd = reach(*this, false);
  for (int v = 0; v < node_count_; ++v) {
    if (!fwd[v] || !bwd[v]) return v;
  }
  return -1;
}

Digraph Digraph::induced(std::span<const int> nodes, std::vector<int>* arc_map) const {
  std::vector<int> local(node_count_, -1);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) local[nodes[i]] = i;
  std::vector<Arc> kept;
  if (arc_map) arc_map->clear();
  for (int e = 0; e < arc_count(); ++e) {
    const int u = local[arcs_[e].tail];
    const int v = local[arcs_[e].head];
    if (u < 0 || v < 0) continue;
    kept.push_back({u, v});
    if (arc_map) arc_map->push_back(e);
  }
  return Digraph(static_cast<int>(nodes.size()), std::move(kept));
}

}  // namespace outpost
