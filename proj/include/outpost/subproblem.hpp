#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "outpost/digraph.hpp"
#include "outpost/network.hpp"
#include "outpost/outposts.hpp"

namespace outpost {

enum class BudgetMode {
  kTotal,    // sum_e w_e <= B: regularizer B * ||f||_inf
  kPerEdge,  // w_e <= B per edge: costs inflate to c + B
};

BudgetMode parse_budget_mode(std::string_view s);
std::string_view to_string(BudgetMode mode);

// Travel-time uncertainty set: baseline costs plus an adversarial budget.
struct TravelBudget {
  std::vector<double> base_costs;  // seconds per edge
  double budget = 0.0;             // seconds
  BudgetMode mode = BudgetMode::kTotal;

  static TravelBudget for_network(const RoadNetwork& net, double budget,
                                  BudgetMode mode = BudgetMode::kTotal);
  void validate(int edge_count) const;
};

struct SubproblemResult {
  bool feasible = true;
  FlowVector flows;
  double lambda = 0.0;     // max_e f_e, the epigraph cap of the L-inf term
  double objective = 0.0;  // worst-case routing cost, second * trips / year
};

// Worst-case routing cost for fixed outposts and demand:
//   min c'f + lambda*B  s.t.  A f <= alpha*y - d,  0 <= f <= lambda
// (total mode) or min (c + B)'f (per-edge mode). Works on any digraph;
// returns feasible = false when some demand cannot be reached.
SubproblemResult solve_routing(const Digraph& g, std::span<const double> base_costs,
                               std::span<const int> outposts, std::span<const double> demand,
                               double budget, BudgetMode mode);

// Validated entry point. `alpha`, when given, must cover the total demand;
// the routing value does not depend on it beyond that.
SubproblemResult solve_subproblem(const RoadNetwork& net, const OutpostSet& y,
                                  std::span<const double> demand, const TravelBudget& tb,
                                  std::optional<double> alpha = std::nullopt);

}  // namespace outpost
