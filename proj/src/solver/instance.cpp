#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "outpost/error.hpp"
#include "outpost/parallel.hpp"
#include "outpost/solver.hpp"

namespace outpost {

RobustInstance::RobustInstance(RoadNetwork net, DemandScenarioSet scen, TravelBudget tb,
                               int outposts)
    : network(std::move(net)), scenarios(std::move(scen)), budget(std::move(tb)), p(outposts) {
  validate();
}

void RobustInstance::validate() const {
  if (p < 1 || p > network.node_count()) {
    throw Error(ErrorKind::kInvalidArgument, "p",
                "outpost count " + std::to_string(p) + " must lie in [1, " +
                    std::to_string(network.node_count()) + "]");
  }
  if (scenarios.size() < 1) {
    throw Error(ErrorKind::kInvalidArgument, "scenarios", "need at least one scenario");
  }
  if (scenarios.node_count() != network.node_count()) {
    throw Error(ErrorKind::kInvalidArgument, "scenarios",
                "scenario dimension " + std::to_string(scenarios.node_count()) +
                    " does not match network with " + std::to_string(network.node_count()) +
                    " nodes");
  }
  budget.validate(network.edge_count());
}

WorstCaseEvaluator::WorstCaseEvaluator(const Digraph& g, std::vector<double> costs, double budget,
                                       BudgetMode mode, std::vector<std::vector<double>> demands)
    : graph_(&g),
      costs_(std::move(costs)),
      budget_(budget),
      mode_(mode),
      demands_(std::move(demands)),
      order_(demands_.size()) {
  std::iota(order_.begin(), order_.end(), 0);
}

double WorstCaseEvaluator::worst(std::span<const int> outposts, double cutoff) {
  std::vector<int> key(outposts.begin(), outposts.end());
  std::sort(key.begin(), key.end());
  auto it = memo_.find(key);
  if (it != memo_.end() && (it->second.exact || it->second.value >= cutoff)) {
    return it->second.value;
  }
  double running = 0.0;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const int k = order_[i];
    ++solved_;
    const double z = solve_routing(*graph_, costs_, key, demands_[k], budget_, mode_).objective;
    running = std::max(running, z);
    if (running >= cutoff && i + 1 < order_.size()) {
      // this scenario just ended a scan; try it first next time
      std::rotate(order_.begin(), order_.begin() + static_cast<long>(i),
                  order_.begin() + static_cast<long>(i) + 1);
      memo_[std::move(key)] = {running, false};
      return running;
    }
  }
  memo_[std::move(key)] = {running, true};
  return running;
}

WorstCaseEvaluator make_evaluator(const RobustInstance& inst, std::span<const int> ids) {
  std::vector<std::vector<double>> demands;
  demands.reserve(ids.size());
  for (int k : ids) {
    const auto d = inst.scenarios.scenario(k);
    demands.emplace_back(d.begin(), d.end());
  }
  return WorstCaseEvaluator(inst.network.graph(), inst.budget.base_costs, inst.budget.budget,
                            inst.budget.mode, std::move(demands));
}

Solution evaluate_solution(const RobustInstance& inst, const OutpostSet& y) {
  Solution sol;
  sol.outposts = y;
  sol.scenario_objectives.assign(inst.scenarios.size(), 0.0);
  parallel_for(inst.scenarios.size(), [&](int k) {
    sol.scenario_objectives[k] = solve_routing(inst.network.graph(), inst.budget.base_costs, y.ids(),
                                               inst.scenarios.scenario(k), inst.budget.budget,
                                               inst.budget.mode)
                                     .objective;
  });
  const auto top = std::max_element(sol.scenario_objectives.begin(), sol.scenario_objectives.end());
  sol.binding_scenario = static_cast<int>(top - sol.scenario_objectives.begin());
  sol.objective = *top;
  sol.epigraph = sol.objective;
  return sol;
}

}  // namespace outpost
