#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "outpost/demand.hpp"
#include "outpost/network.hpp"
#include "outpost/outposts.hpp"
#include "outpost/subproblem.hpp"

namespace outpost {

// Network + demand scenarios + travel-time budget + outpost count. Capacity
// is the total demand of each scenario.
struct RobustInstance {
  RoadNetwork network;
  DemandScenarioSet scenarios;
  TravelBudget budget;
  int p = 1;

  RobustInstance(RoadNetwork net, DemandScenarioSet scen, TravelBudget tb, int outposts);
  void validate() const;
};

struct SolveMetadata {
  std::string method;
  int iterations = 0;
  std::vector<int> generated;             // scenario ids in the order they entered S
  std::vector<double> lower_bounds;       // master value per iteration
  std::vector<double> iteration_seconds;
  double wall_seconds = 0.0;
  long nodes_explored = 0;                // branch-and-bound nodes, when applicable
};

struct Solution {
  OutpostSet outposts;
  double objective = 0.0;          // max_k Z^k(y)
  double epigraph = 0.0;           // t of the single-stage model; equals objective
  int binding_scenario = 0;        // argmax_k Z^k, lowest index on ties
  std::vector<double> scenario_objectives;
  SolveMetadata meta;
};

// max_k Z^k(y) over a fixed list of demand vectors on one digraph, with a
// memo keyed by outpost set. When the running maximum reaches `cutoff` the
// scan stops and the returned value is only a lower bound (>= cutoff).
// Unroutable demand counts as +inf.
class WorstCaseEvaluator {
 public:
  WorstCaseEvaluator(const Digraph& g, std::vector<double> costs, double budget, BudgetMode mode,
                     std::vector<std::vector<double>> demands);

  double worst(std::span<const int> outposts,
               double cutoff = std::numeric_limits<double>::infinity());
  int scenario_count() const { return static_cast<int>(demands_.size()); }
  std::span<const double> demand(int k) const { return demands_[k]; }
  const Digraph& graph() const { return *graph_; }
  long subproblems_solved() const { return solved_; }

 private:
  struct Entry {
    double value;
    bool exact;
  };
  const Digraph* graph_;
  std::vector<double> costs_;
  double budget_;
  BudgetMode mode_;
  std::vector<std::vector<double>> demands_;
  std::vector<int> order_;  // scenarios most likely to bind come first
  std::map<std::vector<int>, Entry> memo_;
  long solved_ = 0;
};

// Evaluator on the full network for the scenarios listed in `ids`.
WorstCaseEvaluator make_evaluator(const RobustInstance& inst, std::span<const int> ids);

// Every scenario at once; fills objective, binding scenario and per-scenario
// values of a solution.
Solution evaluate_solution(const RobustInstance& inst, const OutpostSet& y);

struct BranchAndBoundOptions {
  std::vector<int> fixed;                 // always open
  std::optional<OutpostSet> incumbent;    // optional starting point
  long max_nodes = 5'000'000;
};

struct BranchAndBoundResult {
  OutpostSet outposts;
  double value = 0.0;
  long nodes = 0;
};

// Exact min over |y| = p of max_k Z^k(y) for the scenarios held by the
// evaluator. Best-first search over include/exclude decisions. Each node is
// bounded by the larger of (a) the worst case with every undecided node
// opened and (b) a p-median bound on the budget-free part of each scenario.
// Throws kCapacityExceeded past max_nodes.
BranchAndBoundResult branch_and_bound(WorstCaseEvaluator& eval, std::span<const double> costs,
                                      double budget, BudgetMode mode, int p,
                                      const BranchAndBoundOptions& opts = {});

// P-median on one demand vector (no travel-time budget).
Solution solve_deterministic(const RoadNetwork& net, std::span<const double> demand,
                             std::span<const double> costs, int p);

struct MilpLimits {
  int max_nodes = 80;
  int max_scenarios = 500;
  long max_search_nodes = 5'000'000;
};

// All scenarios in one exact search (the single-stage robust model).
Solution solve_milp(const RobustInstance& inst, const MilpLimits& limits = {});

// Master problem over a scenario subset: returns outposts and their worst
// case over the subset. `previous` is the last master's outposts, if any.
struct MasterResult {
  OutpostSet outposts;
  double value = 0.0;
};
using MasterSolver =
    std::function<MasterResult(std::span<const int> subset, const std::optional<OutpostSet>& previous)>;

MasterSolver exact_master(const RobustInstance& inst, const MilpLimits& limits = {});

struct SgenOptions {
  double tolerance = 1e-6;  // relative gap between master and worst scenario
  int max_iterations = 10'000;
  std::function<void(int iteration, double master, double worst, int k_star)> on_iteration;
};

// Scenario generation: start from S = {0}, solve the master over S, price
// every scenario at the master's outposts, add the worst one until the
// master value reaches it.
Solution sgen(const RobustInstance& inst, const MasterSolver& master, const SgenOptions& opts = {});

// Solution JSON: {"outposts":[...],"objective":..,"binding_scenario":..,
// "iterations":..,"generated":[...], ...}
nlohmann::json to_json(const Solution& sol);
void save_solution(const Solution& sol, const std::filesystem::path& path);
// Outpost ids from a solution document or a bare id array.
std::vector<int> parse_outpost_ids(const nlohmann::json& doc);
OutpostSet load_outposts(const std::filesystem::path& path, int node_count);

}  // namespace outpost
