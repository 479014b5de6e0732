#include "outpost/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "outpost/error.hpp"
#include "outpost/parallel.hpp"

namespace outpost {

DistributionSummary summarize(std::span<const double> values) {
  DistributionSummary s;
  if (values.empty()) return s;
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  s.median = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(n);
  return s;
}

EvaluationReport evaluate_outposts(const RoadNetwork& net, const OutpostSet& y,
                                   const DemandScenarioSet& scenarios, const TravelBudget& tb) {
  if (scenarios.node_count() != net.node_count()) {
    throw Error(ErrorKind::kInvalidArgument, "scenarios",
                "scenario dimension " + std::to_string(scenarios.node_count()) +
                    " does not match network with " + std::to_string(net.node_count()) + " nodes");
  }
  tb.validate(net.edge_count());
  EvaluationReport report;
  report.scenarios.resize(scenarios.size());
  parallel_for(scenarios.size(), [&](int k) {
    auto& row = report.scenarios[k];
    row.scenario = k;
    row.total_trips = scenarios.total(k);
    row.objective = solve_subproblem(net, y, scenarios.scenario(k), tb).objective;
    row.mean_response_s = row.total_trips > 0.0 ? row.objective / row.total_trips : 0.0;
  });
  std::vector<double> responses;
  responses.reserve(report.scenarios.size());
  for (const auto& row : report.scenarios) {
    responses.push_back(row.mean_response_s);
    if (row.scenario == 0 || row.objective > report.worst_objective) {
      report.worst_objective = row.objective;
      report.binding_scenario = row.scenario;
    }
  }
  report.mean_response = summarize(responses);
  return report;
}

void write_evaluation_csv(const EvaluationReport& report, std::ostream& out) {
  out << "k,Z,total_trips,mean_response_s\n";
  char buf[128];
  for (const auto& row : report.scenarios) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", row.scenario, row.objective,
                  row.total_trips, row.mean_response_s);
    out << buf;
  }
}

}  // namespace outpost
