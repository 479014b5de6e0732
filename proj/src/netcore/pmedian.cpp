#include "outpost/pmedian.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "outpost/error.hpp"
#include "outpost/shortest_paths.hpp"

namespace outpost {

OutpostSet PMedianAssignment::facilities() const {
  std::vector<int> ids;
  for (int i = 0; i < node_count; ++i) {
    if (facility_of[i] == i) ids.push_back(i);
  }
  return OutpostSet(std::move(ids), node_count);
}

double PMedianAssignment::objective(std::span<const double> demand) const {
  double total = 0.0;
  for (int j = 0; j < node_count; ++j) total += demand[j] * t(facility_of[j], j);
  return total;
}

double flow_cost(std::span<const double> costs, std::span<const double> flows) {
  double total = 0.0;
  for (std::size_t e = 0; e < flows.size(); ++e) total += costs[e] * flows[e];
  return total;
}

int first_nff_violation(const RoadNetwork& net, const OutpostSet& y, std::span<const double> flows,
                        std::span<const double> demand, double tol) {
  const double alpha = std::accumulate(demand.begin(), demand.end(), 0.0);
  const double slack = tol * std::max(1.0, alpha);
  std::vector<double> net_out(net.node_count(), 0.0);
  for (int e = 0; e < net.edge_count(); ++e) {
    if (flows[e] < -slack) return net.edge(e).tail;
    net_out[net.edge(e).tail] += flows[e];
    net_out[net.edge(e).head] -= flows[e];
  }
  for (int v = 0; v < net.node_count(); ++v) {
    const double rhs = (y.contains(v) ? alpha : 0.0) - demand[v];
    if (net_out[v] > rhs + slack) return v;
  }
  return -1;
}

PMedianAssignment assign_to_nearest(const RoadNetwork& net, const OutpostSet& facilities) {
  const int n = net.node_count();
  PMedianAssignment x;
  x.node_count = n;
  x.facility_of.assign(n, -1);
  x.times.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const int src[] = {i};
    const auto tree = multi_source_shortest_paths(net.graph(), src, net.base_costs());
    std::copy(tree.distance.begin(), tree.distance.end(),
              x.times.begin() + static_cast<std::ptrdiff_t>(i) * n);
  }
  for (int j = 0; j < n; ++j) {
    for (int i : facilities.ids()) {
      if (x.facility_of[j] < 0 || x.t(i, j) < x.t(x.facility_of[j], j)) x.facility_of[j] = i;
    }
  }
  return x;
}

PMedianAssignment nff_to_pmedian(const RoadNetwork& net, const OutpostSet& y,
                                 std::span<const double> flows, std::span<const double> demand) {
  if (y.size() < 1) throw Error(ErrorKind::kInfeasible, "outposts", "no outposts open");
  if (static_cast<int>(flows.size()) != net.edge_count() ||
      static_cast<int>(demand.size()) != net.node_count()) {
    throw Error(ErrorKind::kInvalidArgument, "dimensions", "flow or demand dimension mismatch");
  }
  if (const int bad = first_nff_violation(net, y, flows, demand); bad >= 0) {
    throw Error(ErrorKind::kInfeasible, "node " + std::to_string(bad),
                "flow solution violates balance at node " + std::to_string(bad));
  }
  return assign_to_nearest(net, y);
}

std::pair<OutpostSet, FlowVector> pmedian_to_nff(const RoadNetwork& net,
                                                 const PMedianAssignment& x,
                                                 std::span<const double> demand) {
  const int n = net.node_count();
  if (x.node_count != n || static_cast<int>(x.facility_of.size()) != n) {
    throw Error(ErrorKind::kInvalidArgument, "assignment", "assignment dimension mismatch");
  }
  for (int j = 0; j < n; ++j) {
    const int i = x.facility_of[j];
    if (i < 0 || i >= n || x.facility_of[i] != i) {
      throw Error(ErrorKind::kInfeasible, "node " + std::to_string(j),
                  "node " + std::to_string(j) + " is assigned to a closed facility");
    }
  }
  OutpostSet y = x.facilities();
  FlowVector f(net.edge_count(), 0.0);
  for (int i : y.ids()) {
    const int src[] = {i};
    const auto tree = multi_source_shortest_paths(net.graph(), src, net.base_costs());
    for (int j = 0; j < n; ++j) {
      if (j == i || x.facility_of[j] != i || demand[j] == 0.0) continue;
      for (int v = j; v != i;) {
        const int e = tree.pred_arc[v];
        f[e] += demand[j];
        v = net.edge(e).tail;
      }
    }
  }
  return {std::move(y), std::move(f)};
}

}  // namespace outpost
