#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <string>

#include "outpost/error.hpp"
#include "outpost/lab.hpp"

namespace outpost {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_p(int p, int n) {
  if (p < 1 || p > n) {
    throw Error(ErrorKind::kInvalidArgument, "p",
                "P = " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
  }
}

void check_dimension(const DemandScenarioSet& s, int n, const std::string& what) {
  if (s.size() == 0) throw Error(ErrorKind::kInvalidArgument, what, what + " has no scenarios");
  if (s.node_count() != n) {
    throw Error(ErrorKind::kInvalidArgument, what,
                what + " has dimension " + std::to_string(s.node_count()) + ", network has " +
                    std::to_string(n) + " nodes");
  }
}

ReportRow evaluated_row(std::string label, double param, const RoadNetwork& net,
                        const OutpostSet& y, const DemandScenarioSet& scenarios,
                        const TravelBudget& tb) {
  auto ev = evaluate_outposts(net, y, scenarios, tb);
  ReportRow row;
  row.configuration = std::move(label);
  row.param = param;
  row.outposts.assign(y.ids().begin(), y.ids().end());
  row.mean_response = ev.mean_response;
  row.worst_objective = ev.worst_objective;
  row.binding_scenario = ev.binding_scenario;
  return row;
}

double pct(double base, double v) { return base > 0.0 ? 100.0 * (base - v) / base : 0.0; }

void set_gains(ReportRow& row, const ReportRow& base) {
  row.median_gain_pct = pct(base.mean_response.median, row.mean_response.median);
  row.worst_gain_pct = pct(base.worst_objective, row.worst_objective);
}

// HSGen, then keep whichever of its answer and the fallbacks evaluates best
// on every scenario. The fallbacks also seed restarts.
OutpostSet robust_design(const RobustInstance& inst, HsgenConfig cfg, const std::vector<int>& fixed,
                         const std::vector<OutpostSet>& fallbacks, double* seconds = nullptr) {
  const auto t0 = Clock::now();
  for (const auto& f : fallbacks) cfg.warm_starts.push_back(f);
  auto best = solve_hsgen(inst, cfg, fixed).outposts;
  if (!fallbacks.empty()) {
    double best_v = evaluate_solution(inst, best).objective;
    for (const auto& f : fallbacks) {
      const double v = evaluate_solution(inst, f).objective;
      if (v < best_v) {
        best_v = v;
        best = f;
      }
    }
  }
  if (seconds) *seconds = since(t0);
  return best;
}

TravelBudget budget_for(std::span<const double> costs, const ExperimentSettings& s, double b) {
  return TravelBudget{std::vector<double>(costs.begin(), costs.end()), b, s.mode};
}

nlohmann::json common_parameters(const ExperimentSettings& s) {
  return {{"budget", s.budget},
          {"mode", std::string(to_string(s.mode))},
          {"starts", s.hsgen.starts},
          {"interchanges", s.hsgen.interchanges},
          {"seed", s.hsgen.seed}};
}

}  // namespace

ExperimentReport cross_snapshot(const RoadNetwork& net, const std::vector<Snapshot>& snapshots,
                                int p, const ExperimentSettings& s) {
  const int n = net.node_count();
  check_p(p, n);
  if (snapshots.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "snapshots", "need at least two snapshots");
  }
  std::vector<RoadNetwork> views;
  for (const auto& snap : snapshots) {
    if (static_cast<int>(snap.base_costs.size()) != net.edge_count()) {
      throw Error(ErrorKind::kInvalidArgument, snap.label,
                  "snapshot costs do not match the network's edge count");
    }
    check_dimension(snap.scenarios, n, snap.label);
    views.push_back(net.with_costs(snap.base_costs));
  }

  ExperimentReport report{"snapshots", common_parameters(s), {}};
  report.parameters["p"] = p;
  std::vector<OutpostSet> designs;
  std::vector<double> times;
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    RobustInstance inst(views[i], snapshots[i].scenarios,
                        budget_for(snapshots[i].base_costs, s, s.budget), p);
    double t = 0.0;
    designs.push_back(robust_design(inst, s.hsgen, {}, {}, &t));
    times.push_back(t);
  }
  // row (i, j): designed on snapshot i, evaluated on snapshot j
  const std::size_t m = snapshots.size();
  std::vector<ReportRow> grid;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto row = evaluated_row("optimized=" + snapshots[i].label + " evaluated=" + snapshots[j].label,
                               static_cast<double>(i), views[j], designs[i], snapshots[j].scenarios,
                               budget_for(snapshots[j].base_costs, s, s.budget));
      row.seconds = times[i];
      grid.push_back(std::move(row));
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) set_gains(grid[i * m + j], grid[j * m + j]);
  report.rows = std::move(grid);
  return report;
}

ExperimentReport reposition(const RoadNetwork& net, const OutpostSet& current,
                            const std::vector<int>& ks, const DemandScenarioSet& scenarios,
                            const ExperimentSettings& s) {
  const int n = net.node_count();
  const int p = current.size();
  check_p(p, n);
  check_dimension(scenarios, n, "scenarios");
  const auto tb = budget_for(net.base_costs(), s, s.budget);
  RobustInstance inst(net, scenarios, tb, p);

  ExperimentReport report{"reposition", common_parameters(s), {}};
  report.parameters["current"] = std::vector<int>(current.ids().begin(), current.ids().end());
  report.rows.push_back(evaluated_row("current", 0, net, current, scenarios, tb));

  std::mt19937_64 rng(s.hsgen.seed);
  for (int k : ks) {
    if (k < 0 || k > p) {
      throw Error(ErrorKind::kInvalidArgument, "k",
                  "cannot move " + std::to_string(k) + " of " + std::to_string(p) + " outposts");
    }
    HsgenConfig cfg = s.hsgen;
    cfg.restart_fixed.clear();
    for (int r = 0; r < cfg.starts; ++r) {
      std::vector<int> keep(current.ids().begin(), current.ids().end());
      std::shuffle(keep.begin(), keep.end(), rng);
      keep.resize(p - k);
      std::sort(keep.begin(), keep.end());
      cfg.restart_fixed.push_back(std::move(keep));
    }
    double t = 0.0;
    auto y = robust_design(inst, cfg, {}, {current}, &t);
    auto row = evaluated_row("move " + std::to_string(k), k, net, y, scenarios, tb);
    row.seconds = t;
    set_gains(row, report.rows.front());
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport add_outposts(const RoadNetwork& net, const OutpostSet& current,
                              const std::vector<int>& ks, const DemandScenarioSet& scenarios,
                              const ExperimentSettings& s) {
  const int n = net.node_count();
  check_p(current.size(), n);
  check_dimension(scenarios, n, "scenarios");
  const auto tb = budget_for(net.base_costs(), s, s.budget);
  const std::vector<int> fixed(current.ids().begin(), current.ids().end());

  ExperimentReport report{"add", common_parameters(s), {}};
  report.parameters["current"] = fixed;
  report.rows.push_back(evaluated_row("current", 0, net, current, scenarios, tb));
  for (int k : ks) {
    if (k < 0 || current.size() + k > n) {
      throw Error(ErrorKind::kInvalidArgument, "k",
                  "cannot add " + std::to_string(k) + " outposts to " +
                      std::to_string(current.size()) + " on " + std::to_string(n) + " nodes");
    }
    RobustInstance inst(net, scenarios, tb, current.size() + k);
    double t = 0.0;
    auto y = robust_design(inst, s.hsgen, fixed, {}, &t);
    auto row = evaluated_row("add " + std::to_string(k), k, net, y, scenarios, tb);
    row.seconds = t;
    set_gains(row, report.rows.front());
    report.rows.push_back(std::move(row));
  }
  return report;
}

ExperimentReport greenfield(const RoadNetwork& net, const std::vector<int>& ps,
                            const DemandScenarioSet& scenarios, const ExperimentSettings& s) {
  const int n = net.node_count();
  check_dimension(scenarios, n, "scenarios");
  if (ps.empty()) throw Error(ErrorKind::kInvalidArgument, "p", "empty P sweep");
  std::set<int> sweep(ps.begin(), ps.end());
  for (int p : sweep) check_p(p, n);
  const auto tb = budget_for(net.base_costs(), s, s.budget);

  ExperimentReport report{"greenfield", common_parameters(s), {}};
  report.parameters["p"] = std::vector<int>(sweep.begin(), sweep.end());
  std::optional<OutpostSet> prev;
  for (int p : sweep) {
    // previous design padded with the lowest free ids: never worse than it
    std::vector<OutpostSet> fallbacks;
    if (prev) {
      std::vector<int> ids(prev->ids().begin(), prev->ids().end());
      for (int v = 0; static_cast<int>(ids.size()) < p; ++v)
        if (!prev->contains(v)) ids.push_back(v);
      fallbacks.emplace_back(std::move(ids), n);
    }
    RobustInstance inst(net, scenarios, tb, p);
    double t = 0.0;
    auto y = robust_design(inst, s.hsgen, {}, fallbacks, &t);
    auto row = evaluated_row("P=" + std::to_string(p), p, net, y, scenarios, tb);
    row.seconds = t;
    if (!report.rows.empty()) set_gains(row, report.rows.front());
    report.rows.push_back(std::move(row));
    prev = y;
  }
  return report;
}

ExperimentReport dual_network_compare(const RoadNetwork& sub, const RoadNetwork& super,
                                      const DemandScenarioSet& scenarios, int p,
                                      const ExperimentSettings& s) {
  const int na = sub.node_count();
  const int nb = super.node_count();
  if (na > nb) {
    throw Error(ErrorKind::kInvalidArgument, "sub",
                "sub-network has more nodes than the super-network");
  }
  check_p(p, na);
  check_dimension(scenarios, nb, "scenarios");

  // every sub arc present in the super-network at no higher cost
  bool arcs_included = true;
  for (const auto& e : sub.edges()) {
    bool found = false;
    for (int a : super.graph().out_arcs(e.tail)) {
      if (super.graph().arc(a).head == e.head && super.base_costs()[a] <= e.base_cost) found = true;
    }
    arcs_included = arcs_included && found;
  }

  std::vector<std::vector<double>> on_sub, captured;
  double lost = 0.0;
  for (const auto& d : scenarios.all()) {
    on_sub.emplace_back(d.begin(), d.begin() + na);
    captured.emplace_back(d);
    std::fill(captured.back().begin() + na, captured.back().end(), 0.0);
    for (int v = na; v < nb; ++v) lost += d[v];
  }
  lost /= scenarios.size();
  const DemandScenarioSet sub_demand(on_sub, scenarios.seed());
  const DemandScenarioSet captured_demand(captured, scenarios.seed());
  const auto tb_sub = budget_for(sub.base_costs(), s, s.budget);
  const auto tb_super = budget_for(super.base_costs(), s, s.budget);

  ExperimentReport report{"dualnet", common_parameters(s), {}};
  report.parameters["p"] = p;
  report.parameters["sub_nodes"] = na;
  report.parameters["super_nodes"] = nb;
  report.parameters["arcs_included"] = arcs_included;

  double t_sub = 0.0, t_super = 0.0;
  const auto y_sub = robust_design(RobustInstance(sub, sub_demand, tb_sub, p), s.hsgen, {}, {}, &t_sub);
  const OutpostSet lifted(std::vector<int>(y_sub.ids().begin(), y_sub.ids().end()), nb);
  const auto y_super = robust_design(RobustInstance(super, scenarios, tb_super, p), s.hsgen, {},
                                     {lifted}, &t_super);

  auto a = evaluated_row("shared outposts, sub-network", 0, sub, y_sub, sub_demand, tb_sub);
  a.lost_demand = lost;
  a.seconds = t_sub;
  auto b = evaluated_row("shared outposts, super-network, captured demand", 1, super, lifted,
                         captured_demand, tb_super);
  b.lost_demand = lost;
  set_gains(b, a);
  auto c = evaluated_row("shared outposts, super-network, all demand", 2, super, lifted,
                         scenarios, tb_super);
  auto d = evaluated_row("super-network optimized", 3, super, y_super, scenarios, tb_super);
  d.seconds = t_super;
  set_gains(d, c);
  report.rows = {a, b, c, d};
  return report;
}

ExperimentReport value_of_robustness(const RoadNetwork& net, const DemandScenarioSet& scenarios,
                                     const std::vector<double>& budgets, int p,
                                     const ExperimentSettings& s) {
  const int n = net.node_count();
  check_p(p, n);
  check_dimension(scenarios, n, "scenarios");
  if (budgets.empty()) throw Error(ErrorKind::kInvalidArgument, "budgets", "empty budget grid");

  ExperimentReport report{"vor", common_parameters(s), {}};
  report.parameters["p"] = p;
  report.parameters["budgets"] = budgets;

  const auto t0 = Clock::now();
  const auto mean = scenarios.mean();
  const auto y_det = solve_deterministic(net, mean, net.base_costs(), p).outposts;
  const double t_det = since(t0);

  for (double b : budgets) {
    const auto tb = budget_for(net.base_costs(), s, b);
    RobustInstance inst(net, scenarios, tb, p);
    auto det = evaluated_row("deterministic", b, net, y_det, scenarios, tb);
    det.seconds = t_det;

    double t_rob = 0.0;
    const auto y_rob = robust_design(inst, s.hsgen, {}, {y_det}, &t_rob);
    auto rob = evaluated_row("robust", b, net, y_rob, scenarios, tb);
    rob.seconds = t_rob;
    set_gains(rob, det);

    // one design per scenario, each seeded with the robust design
    const auto t1 = Clock::now();
    std::vector<double> z(scenarios.size()), response(scenarios.size());
    for (int k = 0; k < scenarios.size(); ++k) {
      const std::vector<int> only{k};
      RobustInstance single(net, scenarios.subset(only), tb, p);
      HsgenConfig cfg = s.hsgen;
      cfg.warm_starts.push_back(y_rob);
      auto sol = hsgen_solve(single, cfg);
      const double own = evaluate_solution(single, y_rob).objective;
      z[k] = std::min(sol.objective, own);
      const double trips = scenarios.total(k);
      response[k] = trips > 0.0 ? z[k] / trips : 0.0;
    }
    ReportRow pi;
    pi.configuration = "perfect information";
    pi.param = b;
    pi.mean_response = summarize(response);
    const auto top = std::max_element(z.begin(), z.end());
    pi.worst_objective = *top;
    pi.binding_scenario = static_cast<int>(top - z.begin());
    pi.seconds = since(t1);
    set_gains(pi, det);

    report.rows.push_back(std::move(det));
    report.rows.push_back(std::move(rob));
    report.rows.push_back(std::move(pi));
  }
  return report;
}

ExperimentReport budget_sensitivity(const RoadNetwork& net, const DemandScenarioSet& scenarios,
                                    double fixed_budget, const std::vector<double>& budgets, int p,
                                    const ExperimentSettings& s) {
  const int n = net.node_count();
  check_p(p, n);
  check_dimension(scenarios, n, "scenarios");
  if (budgets.empty()) throw Error(ErrorKind::kInvalidArgument, "budgets", "empty budget grid");

  ExperimentReport report{"budget", common_parameters(s), {}};
  report.parameters["p"] = p;
  report.parameters["fixed_budget"] = fixed_budget;
  report.parameters["budgets"] = budgets;

  double t_fixed = 0.0;
  const auto y_fixed = robust_design(
      RobustInstance(net, scenarios, budget_for(net.base_costs(), s, fixed_budget), p), s.hsgen, {},
      {}, &t_fixed);
  for (double b : budgets) {
    const auto tb = budget_for(net.base_costs(), s, b);
    auto fixed = evaluated_row("designed at fixed budget", b, net, y_fixed, scenarios, tb);
    fixed.seconds = t_fixed;
    double t = 0.0;
    const auto y = robust_design(RobustInstance(net, scenarios, tb, p), s.hsgen, {}, {y_fixed}, &t);
    auto re = evaluated_row("designed at this budget", b, net, y, scenarios, tb);
    re.seconds = t;
    set_gains(re, fixed);
    report.rows.push_back(std::move(fixed));
    report.rows.push_back(std::move(re));
  }
  return report;
}

ExperimentReport hsgen_tuning(const RoadNetwork& net, const DemandScenarioSet& scenarios, int p,
                              const std::vector<int>& starts, const std::vector<int>& interchanges,
                              const ExperimentSettings& s) {
  const int n = net.node_count();
  check_p(p, n);
  check_dimension(scenarios, n, "scenarios");
  const auto tb = budget_for(net.base_costs(), s, s.budget);
  RobustInstance inst(net, scenarios, tb, p);

  ExperimentReport report{"tuning", common_parameters(s), {}};
  report.parameters["p"] = p;
  report.parameters["starts"] = starts;
  report.parameters["interchanges"] = interchanges;
  for (int st : starts) {
    for (int il : interchanges) {
      HsgenConfig cfg = s.hsgen;
      cfg.starts = st;
      cfg.interchanges = il;
      cfg.validate();
      double t = 0.0;
      const auto y = robust_design(inst, cfg, {}, {}, &t);
      auto row = evaluated_row("starts=" + std::to_string(st) + " interchanges=" + std::to_string(il),
                               st, net, y, scenarios, tb);
      row.seconds = t;
      if (!report.rows.empty()) set_gains(row, report.rows.front());
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace outpost
