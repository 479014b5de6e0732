#include "outpost/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "outpost/error.hpp"
#include "outpost/shortest_paths.hpp"
#include "outpost/transport.hpp"

namespace outpost {

BudgetMode parse_budget_mode(std::string_view s) {
  if (s == "total") return BudgetMode::kTotal;
  if (s == "peredge" || s == "per-edge" || s == "per_edge") return BudgetMode::kPerEdge;
  throw Error(ErrorKind::kInvalidArgument, std::string(s),
              "unknown budget mode '" + std::string(s) + "' (expected total|peredge)");
}

std::string_view to_string(BudgetMode mode) {
  return mode == BudgetMode::kTotal ? "total" : "peredge";
}

TravelBudget TravelBudget::for_network(const RoadNetwork& net, double budget, BudgetMode mode) {
  TravelBudget tb;
  tb.base_costs.assign(net.base_costs().begin(), net.base_costs().end());
  tb.budget = budget;
  tb.mode = mode;
  tb.validate(net.edge_count());
  return tb;
}

void TravelBudget::validate(int edge_count) const {
  if (!(budget >= 0.0) || !std::isfinite(budget)) {
    throw Error(ErrorKind::kInvalidArgument, "budget", "budget must be finite and >= 0");
  }
  if (static_cast<int>(base_costs.size()) != edge_count) {
    throw Error(ErrorKind::kInvalidArgument, "base_costs",
                "budget has " + std::to_string(base_costs.size()) + " costs for " +
                    std::to_string(edge_count) + " edges");
  }
  for (std::size_t e = 0; e < base_costs.size(); ++e) {
    if (!(base_costs[e] >= 0.0) || !std::isfinite(base_costs[e])) {
      throw Error(ErrorKind::kNegativeCost, "edge " + std::to_string(e),
                  "edge " + std::to_string(e) + " has invalid baseline cost");
    }
  }
}

namespace {

constexpr double kObjectiveTol = 1e-12;

double max_entry(const FlowVector& f) {
  return f.empty() ? 0.0 : *std::max_element(f.begin(), f.end());
}

SubproblemResult finish(FlowVector flows, std::span<const double> costs, double budget,
                        BudgetMode mode) {
  SubproblemResult r;
  r.lambda = max_entry(flows);
  double linear = 0.0;
  double total_flow = 0.0;
  for (std::size_t e = 0; e < flows.size(); ++e) {
    linear += costs[e] * flows[e];
    total_flow += flows[e];
  }
  r.objective = mode == BudgetMode::kTotal ? linear + budget * r.lambda : linear + budget * total_flow;
  r.flows = std::move(flows);
  return r;
}

SubproblemResult infeasible(int arcs) {
  SubproblemResult r;
  r.feasible = false;
  r.flows.assign(arcs, 0.0);
  r.objective = std::numeric_limits<double>::infinity();
  r.lambda = std::numeric_limits<double>::infinity();
  return r;
}

// Point on g(t) = mincost(t) + B t with a subgradient.
struct Probe {
  double t = 0.0;
  double g = 0.0;
  double slope = 0.0;
  FlowVector flows;
};

}  // namespace

SubproblemResult solve_routing(const Digraph& g, std::span<const double> base_costs,
                               std::span<const int> outposts, std::span<const double> demand,
                               double budget, BudgetMode mode) {
  const int m = g.arc_count();
  std::vector<char> is_outpost(g.node_count(), 0);
  for (int s : outposts) is_outpost[s] = 1;
  double remote = 0.0;
  for (int v = 0; v < g.node_count(); ++v) {
    if (!is_outpost[v]) remote += demand[v];
  }
  if (remote == 0.0) return finish(FlowVector(m, 0.0), base_costs, budget, mode);
  if (outposts.empty()) return infeasible(m);

  if (mode == BudgetMode::kPerEdge) {
    std::vector<double> inflated(base_costs.begin(), base_costs.end());
    for (double& c : inflated) c += budget;
    const auto tree = multi_source_shortest_paths(g, outposts, inflated);
    for (int v = 0; v < g.node_count(); ++v) {
      if (demand[v] > 0.0 && tree.nearest_source[v] < 0) return infeasible(m);
    }
    return finish(tree_flows(g, tree, demand), base_costs, budget, mode);
  }

  const auto tree = multi_source_shortest_paths(g, outposts, base_costs);
  for (int v = 0; v < g.node_count(); ++v) {
    if (demand[v] > 0.0 && tree.nearest_source[v] < 0) return infeasible(m);
  }
  FlowVector sp_flows = tree_flows(g, tree, demand);
  if (budget == 0.0) return finish(std::move(sp_flows), base_costs, budget, mode);

  // g(t) is convex piecewise linear on [t_min, inf) and equals the
  // shortest-path cost + B t beyond the largest tree flow. Its minimizer is
  // found by intersecting supporting lines until the lower model is tight.
  Probe hi;
  hi.t = max_entry(sp_flows);
  hi.g = std::inner_product(base_costs.begin(), base_costs.end(), sp_flows.begin(), 0.0) +
         budget * hi.t;
  hi.slope = budget;
  hi.flows = std::move(sp_flows);

  TransportNetwork transport(g, base_costs, outposts, demand);
  double t_min = transport.min_feasible_cap();
  if (!std::isfinite(t_min)) return infeasible(m);
  if (t_min >= hi.t) return finish(std::move(hi.flows), base_costs, budget, mode);

  auto probe = [&](double t) {
    for (int attempt = 0;; ++attempt) {
      auto flow = transport.min_cost_flow(t);
      if (flow.feasible) {
        Probe p;
        p.t = t;
        p.g = flow.cost + budget * t;
        p.slope = budget + flow.cap_slope;
        p.flows = std::move(flow.flows);
        return p;
      }
      // Only reachable through round-off right at t_min.
      if (attempt > 40) throw Error(ErrorKind::kInfeasible, "routing", "capacity search failed");
      t = std::nextafter(t, std::numeric_limits<double>::infinity()) * (1.0 + 1e-12);
    }
  };

  Probe lo = probe(t_min);
  const Probe* best = lo.g <= hi.g ? &lo : &hi;
  auto settle = [&](const Probe* b) { return finish(b->flows, base_costs, budget, mode); };
  if (lo.slope >= 0.0) return settle(&lo);

  Probe mid;
  for (int iter = 0; iter < 200; ++iter) {
    const double denom = lo.slope - hi.slope;
    if (denom >= 0.0) break;
    double t = (hi.g - lo.g + lo.slope * lo.t - hi.slope * hi.t) / denom;
    t = std::clamp(t, lo.t, hi.t);
    const double lower = lo.g + lo.slope * (t - lo.t);
    const double scale = std::max(1.0, std::abs(best->g));
    if (best->g - lower <= kObjectiveTol * scale) break;
    if (t <= lo.t || t >= hi.t) break;
    Probe p = probe(t);
    const bool tight = p.g - lower <= kObjectiveTol * scale;
    if (p.slope >= 0.0) {
      hi = std::move(p);
    } else {
      lo = std::move(p);
    }
    best = lo.g <= hi.g ? &lo : &hi;
    if (tight) break;
  }
  return settle(best);
}

SubproblemResult solve_subproblem(const RoadNetwork& net, const OutpostSet& y,
                                  std::span<const double> demand, const TravelBudget& tb,
                                  std::optional<double> alpha) {
  tb.validate(net.edge_count());
  if (static_cast<int>(demand.size()) != net.node_count()) {
    throw Error(ErrorKind::kInvalidArgument, "demand", "demand dimension does not match network");
  }
  if (y.node_count() != net.node_count() || y.size() < 1) {
    throw Error(ErrorKind::kInvalidArgument, "outposts", "need at least one outpost on this network");
  }
  const double total = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (alpha && *alpha < total) {
    throw Error(ErrorKind::kInfeasible, "alpha",
                "outpost capacity " + std::to_string(*alpha) + " is below total demand " +
                    std::to_string(total));
  }
  auto r = solve_routing(net.graph(), tb.base_costs, y.ids(), demand, tb.budget, tb.mode);
  if (!r.feasible) throw Error(ErrorKind::kInfeasible, "demand", "demand is not routable");
  return r;
}

}  // namespace outpost
