#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "outpost/demand.hpp"
#include "outpost/evaluate.hpp"
#include "outpost/hsgen.hpp"
#include "outpost/network.hpp"
#include "outpost/subproblem.hpp"

namespace outpost {

// One time-of-day view of the city: its travel times and its demand draws.
struct Snapshot {
  std::string label;
  std::vector<double> base_costs;
  DemandScenarioSet scenarios;
};

struct ReportRow {
  std::string configuration;
  double param = 0.0;                 // k, P or B depending on the experiment
  std::vector<int> outposts;          // empty when the policy varies by scenario
  DistributionSummary mean_response;  // seconds per trip, over scenarios
  double worst_objective = 0.0;
  int binding_scenario = 0;
  double lost_demand = 0.0;           // mean trips per scenario the network cannot reach
  double median_gain_pct = 0.0;       // vs the experiment's baseline row
  double worst_gain_pct = 0.0;
  double seconds = 0.0;               // solve time; 0 for plain evaluations
};

struct ExperimentReport {
  std::string kind;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<ReportRow> rows;
};

// Shared knobs for every experiment.
struct ExperimentSettings {
  double budget = 1000.0;
  BudgetMode mode = BudgetMode::kTotal;
  HsgenConfig hsgen;
};

// Optimize per snapshot, evaluate every optimum on every snapshot.
ExperimentReport cross_snapshot(const RoadNetwork& net, const std::vector<Snapshot>& snapshots,
                                int p, const ExperimentSettings& s);

// Move k of the current outposts (a fresh random choice per restart).
ExperimentReport reposition(const RoadNetwork& net, const OutpostSet& current,
                            const std::vector<int>& ks, const DemandScenarioSet& scenarios,
                            const ExperimentSettings& s);

// Keep the current outposts and add k more.
ExperimentReport add_outposts(const RoadNetwork& net, const OutpostSet& current,
                              const std::vector<int>& ks, const DemandScenarioSet& scenarios,
                              const ExperimentSettings& s);

// Design from scratch for every P in the sweep.
ExperimentReport greenfield(const RoadNetwork& net, const std::vector<int>& ps,
                            const DemandScenarioSet& scenarios, const ExperimentSettings& s);

// Sub-network A (node ids 0..nA-1 of B) against super-network B under the
// same demand, given on B's nodes. Demand on nodes missing from A is lost
// for A.
ExperimentReport dual_network_compare(const RoadNetwork& sub, const RoadNetwork& super,
                                      const DemandScenarioSet& scenarios, int p,
                                      const ExperimentSettings& s);

// Deterministic (mean demand, no budget), robust and perfect-information
// policies for every budget on the grid.
ExperimentReport value_of_robustness(const RoadNetwork& net, const DemandScenarioSet& scenarios,
                                     const std::vector<double>& budgets, int p,
                                     const ExperimentSettings& s);

// Outposts fixed at one budget against outposts re-optimized per budget.
ExperimentReport budget_sensitivity(const RoadNetwork& net, const DemandScenarioSet& scenarios,
                                    double fixed_budget, const std::vector<double>& budgets, int p,
                                    const ExperimentSettings& s);

// Objective and time over a grid of restart and interchange counts.
ExperimentReport hsgen_tuning(const RoadNetwork& net, const DemandScenarioSet& scenarios, int p,
                              const std::vector<int>& starts, const std::vector<int>& interchanges,
                              const ExperimentSettings& s);

// CSV columns: kind,configuration,param,outposts,median_s,min_s,max_s,mean_s,
// worst_objective,binding_scenario,lost_demand,median_gain_pct,worst_gain_pct,seconds
// (outposts are space-separated ids).
void write_report_csv(const ExperimentReport& report, std::ostream& out);
nlohmann::json to_json(const ExperimentReport& report);
void save_report(const ExperimentReport& report, const std::filesystem::path& csv_path,
                 const std::filesystem::path& json_path);

}  // namespace outpost
