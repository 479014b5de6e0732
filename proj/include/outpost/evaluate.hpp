#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "outpost/demand.hpp"
#include "outpost/network.hpp"
#include "outpost/outposts.hpp"
#include "outpost/subproblem.hpp"

namespace outpost {

struct ScenarioEvaluation {
  int scenario = 0;
  double objective = 0.0;        // Z^k
  double total_trips = 0.0;      // 1'd^k
  double mean_response_s = 0.0;  // Z^k / 1'd^k, 0 when there are no trips
};

struct DistributionSummary {
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

DistributionSummary summarize(std::span<const double> values);

struct EvaluationReport {
  std::vector<ScenarioEvaluation> scenarios;
  DistributionSummary mean_response;  // over scenarios, seconds per trip
  double worst_objective = 0.0;       // max_k Z^k
  int binding_scenario = 0;           // argmax_k Z^k, lowest index on ties
};

// Fixed outposts evaluated on every scenario of the set.
EvaluationReport evaluate_outposts(const RoadNetwork& net, const OutpostSet& y,
                                   const DemandScenarioSet& scenarios, const TravelBudget& tb);

// CSV with header "k,Z,total_trips,mean_response_s"; 17 significant digits.
void write_evaluation_csv(const EvaluationReport& report, std::ostream& out);

}  // namespace outpost
