// outpost: command-line front end. Library failures are reported on stderr as
// one JSON object {"error": kind, "element": ..., "message": ...}.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "outpost/error.hpp"
#include "outpost/evaluate.hpp"
#include "outpost/hsgen.hpp"
#include "outpost/lab.hpp"
#include "outpost/solver.hpp"

using namespace outpost;
namespace fs = std::filesystem;

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

void report_error(const std::string& kind, const std::string& element, const std::string& message) {
  nlohmann::json j{{"error", kind}, {"element", element}, {"message", message}};
  std::cerr << j.dump() << '\n';
}

PopulationMode parse_period(const std::string& s) {
  if (s == "day") return PopulationMode::kDay;
  if (s == "night") return PopulationMode::kNight;
  if (s == "mixed") return PopulationMode::kMixed;
  throw Error(ErrorKind::kInvalidArgument, "period", "unknown period '" + s + "'");
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorKind::kInvalidArgument, p.string(), "cannot open for writing");
  return out;
}

struct SolveArgs {
  std::string method = "hsgen";
  std::string network, scenarios, fixed, out;
  double budget = 1000.0;
  std::string mode = "total";
  int p = 20;
  std::uint64_t seed = 7;
  int starts = 10;
  int interchanges = 10;
};

int run_solve(const SolveArgs& a) {
  auto net = load_network(a.network);
  auto scen = load_scenarios(a.scenarios);
  TravelBudget tb = TravelBudget::for_network(net, a.budget, parse_budget_mode(a.mode));
  std::vector<int> fixed;
  if (!a.fixed.empty()) {
    auto ids = load_outposts(a.fixed, net.node_count()).ids();
    fixed.assign(ids.begin(), ids.end());
  }
  if (!fixed.empty() && a.method != "hsgen") {
    throw Error(ErrorKind::kInvalidArgument, "fixed", "--fixed is only supported by --method hsgen");
  }
  Solution sol;
  if (a.method == "det") {
    if (scen.node_count() != net.node_count()) {
      throw Error(ErrorKind::kInvalidArgument, "scenarios", "scenario dimension does not match network");
    }
    sol = solve_deterministic(net, scen.mean(), net.base_costs(), a.p);
  } else {
    RobustInstance inst(net, scen, tb, a.p);
    if (a.method == "milp") {
      sol = solve_milp(inst);
    } else if (a.method == "sgen") {
      sol = sgen(inst, exact_master(inst));
    } else if (a.method == "hsgen") {
      HsgenConfig cfg;
      cfg.seed = a.seed;
      cfg.starts = a.starts;
      cfg.interchanges = a.interchanges;
      sol = solve_hsgen(inst, cfg, fixed);
    } else {
      throw Error(ErrorKind::kInvalidArgument, "method", "unknown method '" + a.method + "'");
    }
  }
  if (!a.out.empty()) save_solution(sol, a.out);
  nlohmann::json summary{{"method", sol.meta.method},
                         {"objective", sol.objective},
                         {"outposts", std::vector<int>(sol.outposts.ids().begin(), sol.outposts.ids().end())},
                         {"iterations", sol.meta.iterations},
                         {"generated", sol.meta.generated.size()},
                         {"wall_seconds", sol.meta.wall_seconds}};
  std::cout << summary.dump() << '\n';
  return 0;
}

struct ExperimentArgs {
  std::string kind;
  std::string network, scenarios, current, sub_network, snapshots, out, json;
  double budget = 1000.0;
  double fixed_budget = 1000.0;
  std::string mode = "total";
  int p = 20;
  std::uint64_t seed = 7;
  int starts = 10;
  int interchanges = 10;
  std::vector<int> ks{1};
  std::vector<int> p_sweep;
  std::vector<double> budgets{0, 10, 50, 100, 250, 500, 1000};
  std::vector<int> starts_grid{1, 5, 10, 20};
  std::vector<int> interchanges_grid{1, 5, 10, 20};
};

void require(const std::string& value, const std::string& flag, const std::string& kind) {
  if (value.empty()) {
    throw Error(ErrorKind::kInvalidArgument, flag, "experiment " + kind + " needs " + flag);
  }
}

std::vector<Snapshot> load_snapshots(const fs::path& path, const RoadNetwork& net) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, path.string(), "cannot open snapshot list");
  std::vector<Snapshot> out;
  try {
    auto doc = nlohmann::json::parse(in);
    for (const auto& s : doc) {
      const fs::path dir = path.parent_path();
      auto view = load_network(dir / s.at("network").get<std::string>());
      if (view.edge_count() != net.edge_count() || view.node_count() != net.node_count()) {
        throw Error(ErrorKind::kInvalidArgument, s.at("network").get<std::string>(),
                    "snapshot network topology differs from --network");
      }
      out.push_back({s.at("label").get<std::string>(),
                     std::vector<double>(view.base_costs().begin(), view.base_costs().end()),
                     load_scenarios(dir / s.at("scenarios").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, path.string(), e.what());
  }
  return out;
}

int run_experiment(const ExperimentArgs& a) {
  require(a.network, "--network", a.kind);
  auto net = load_network(a.network);
  ExperimentSettings s;
  s.budget = a.budget;
  s.mode = parse_budget_mode(a.mode);
  s.hsgen.seed = a.seed;
  s.hsgen.starts = a.starts;
  s.hsgen.interchanges = a.interchanges;
  s.hsgen.validate();

  ExperimentReport report;
  if (a.kind == "snapshots") {
    require(a.snapshots, "--snapshots", a.kind);
    report = cross_snapshot(net, load_snapshots(a.snapshots, net), a.p, s);
  } else {
    require(a.scenarios, "--scenarios", a.kind);
    auto scen = load_scenarios(a.scenarios);
    if (a.kind == "reposition" || a.kind == "add") {
      require(a.current, "--current", a.kind);
      auto current = load_outposts(a.current, net.node_count());
      report = a.kind == "add" ? add_outposts(net, current, a.ks, scen, s)
                               : reposition(net, current, a.ks, scen, s);
    } else if (a.kind == "greenfield") {
      report = greenfield(net, a.p_sweep.empty() ? std::vector<int>{a.p} : a.p_sweep, scen, s);
    } else if (a.kind == "dualnet") {
      require(a.sub_network, "--sub-network", a.kind);
      report = dual_network_compare(load_network(a.sub_network), net, scen, a.p, s);
    } else if (a.kind == "vor") {
      report = value_of_robustness(net, scen, a.budgets, a.p, s);
    } else if (a.kind == "budget") {
      report = budget_sensitivity(net, scen, a.fixed_budget, a.budgets, a.p, s);
    } else {
      report = hsgen_tuning(net, scen, a.p, a.starts_grid, a.interchanges_grid, s);
    }
  }
  fs::path csv = a.out;
  fs::path json = a.json;
  if (json.empty() && !csv.empty()) json = fs::path(csv).replace_extension(".json");
  if (csv.empty()) write_report_csv(report, std::cout);
  save_report(report, csv, json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust outpost location and routing"};
  app.require_subcommand(1);

  // gen-network
  auto* gn = app.add_subcommand("gen-network", "Random strongly connected road network");
  int gn_nodes = 75, gn_edges = 226, gn_wards = 4;
  std::uint64_t gn_seed = 1;
  std::string gn_out;
  gn->add_option("--nodes", gn_nodes, "Node count");
  gn->add_option("--edges", gn_edges, "Arc count");
  gn->add_option("--seed", gn_seed, "Seed");
  gn->add_option("--wards", gn_wards, "Ward strips recorded on the nodes");
  gn->add_option("-o,--output", gn_out, "Network JSON")->required();

  // gen-wards
  auto* gw = app.add_subcommand("gen-wards", "Synthetic ward profiles tiling a network");
  std::string gw_net, gw_out;
  int gw_rows = 3, gw_cols = 3;
  std::uint64_t gw_seed = 7;
  gw->add_option("--network", gw_net, "Network JSON")->required();
  gw->add_option("--rows", gw_rows, "Ward rows");
  gw->add_option("--cols", gw_cols, "Ward columns");
  gw->add_option("--seed", gw_seed, "Seed");
  gw->add_option("-o,--output", gw_out, "Ward profile JSON")->required();

  // gen-scenarios
  auto* gs = app.add_subcommand("gen-scenarios", "Sample demand scenarios");
  std::string gs_wards, gs_net, gs_out, gs_period = "mixed";
  int gs_n = 100;
  std::uint64_t gs_seed = 7;
  double gs_grid = kDefaultGridSpacing;
  gs->add_option("--wards", gs_wards, "Ward profile JSON")->required();
  gs->add_option("--network", gs_net, "Network JSON")->required();
  gs->add_option("--n", gs_n, "Scenario count");
  gs->add_option("--seed", gs_seed, "Seed; scenario k uses seed + k");
  gs->add_option("--grid", gs_grid, "Grid spacing in meters");
  gs->add_option("--period", gs_period, "day, night or mixed");
  gs->add_option("-o,--output", gs_out, "Scenario CSV")->required();

  // solve
  auto* so = app.add_subcommand("solve", "Locate outposts");
  SolveArgs sa;
  so->add_option("--method", sa.method, "det, milp, sgen or hsgen");
  so->add_option("--network", sa.network, "Network JSON")->required();
  so->add_option("--scenarios", sa.scenarios, "Scenario CSV")->required();
  so->add_option("--budget", sa.budget, "Travel-time budget B in seconds");
  so->add_option("--mode", sa.mode, "total or peredge");
  so->add_option("--p", sa.p, "Outpost count");
  so->add_option("--seed", sa.seed, "Heuristic seed");
  so->add_option("--starts", sa.starts, "Random restarts");
  so->add_option("--interchanges", sa.interchanges, "Swaps tried per interchange phase");
  so->add_option("--fixed", sa.fixed, "Outposts that must stay open (JSON)");
  so->add_option("-o,--output", sa.out, "Solution JSON");

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "Worst-case routing cost of fixed outposts");
  std::string ev_net, ev_y, ev_scen, ev_out, ev_mode = "total";
  double ev_budget = 1000.0;
  ev->add_option("--network", ev_net, "Network JSON")->required();
  ev->add_option("--outposts", ev_y, "Outposts JSON")->required();
  ev->add_option("--scenarios", ev_scen, "Scenario CSV")->required();
  ev->add_option("--budget", ev_budget, "Travel-time budget B in seconds");
  ev->add_option("--mode", ev_mode, "total or peredge");
  ev->add_option("-o,--output", ev_out, "Per-scenario CSV (stdout when omitted)");

  // experiment
  auto* ex = app.add_subcommand("experiment", "Policy experiments");
  ExperimentArgs ea;
  ex->add_option("kind", ea.kind, "reposition, add, greenfield, dualnet, vor, budget, snapshots or tuning")
      ->required()
      ->check(CLI::IsMember(
          {"reposition", "add", "greenfield", "dualnet", "vor", "budget", "snapshots", "tuning"}));
  ex->add_option("--network", ea.network, "Network JSON (the super-network for dualnet)");
  ex->add_option("--scenarios", ea.scenarios, "Scenario CSV");
  ex->add_option("--current", ea.current, "Existing outposts JSON (reposition, add)");
  ex->add_option("--sub-network", ea.sub_network, "Sub-network JSON (dualnet)");
  ex->add_option("--snapshots", ea.snapshots, "Snapshot list JSON (snapshots)");
  ex->add_option("--budget", ea.budget, "Travel-time budget B in seconds");
  ex->add_option("--fixed-budget", ea.fixed_budget, "Design budget (budget)");
  ex->add_option("--budgets", ea.budgets, "Budget grid (vor, budget)")->delimiter(',');
  ex->add_option("--mode", ea.mode, "total or peredge");
  ex->add_option("--p", ea.p, "Outpost count");
  ex->add_option("--p-sweep", ea.p_sweep, "P values (greenfield)")->delimiter(',');
  ex->add_option("--k", ea.ks, "Outposts moved or added (reposition, add)")->delimiter(',');
  ex->add_option("--seed", ea.seed, "Heuristic seed");
  ex->add_option("--starts", ea.starts, "Random restarts");
  ex->add_option("--interchanges", ea.interchanges, "Swaps tried per interchange phase");
  ex->add_option("--starts-grid", ea.starts_grid, "Restart counts (tuning)")->delimiter(',');
  ex->add_option("--interchanges-grid", ea.interchanges_grid, "Swap counts (tuning)")->delimiter(',');
  ex->add_option("-o,--output", ea.out, "Report CSV (stdout when omitted)");
  ex->add_option("--json", ea.json, "Report JSON (default: CSV path with .json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", "", e.what());
    return kExitUsage;
  }

  try {
    if (gn->parsed()) {
      RandomNetworkOptions opts;
      opts.wards = gn_wards;
      save_network(random_network(gn_nodes, gn_edges, gn_seed, opts), gn_out);
    } else if (gw->parsed()) {
      auto net = load_network(gw_net);
      auto out = open_out(gw_out);
      out << to_json(synthetic_wards(net, gw_rows, gw_cols, gw_seed)).dump(2) << '\n';
    } else if (gs->parsed()) {
      auto net = load_network(gs_net);
      auto wards = load_ward_profiles(gs_wards);
      auto map = build_ward_node_map(net, wards, gs_grid);
      save_scenarios(generate_scenario_set(wards, map, net.node_count(), gs_n, gs_seed,
                                           parse_period(gs_period)),
                     gs_out);
    } else if (so->parsed()) {
      return run_solve(sa);
    } else if (ev->parsed()) {
      auto net = load_network(ev_net);
      auto y = load_outposts(ev_y, net.node_count());
      auto scen = load_scenarios(ev_scen);
      auto tb = TravelBudget::for_network(net, ev_budget, parse_budget_mode(ev_mode));
      auto report = evaluate_outposts(net, y, scen, tb);
      if (ev_out.empty()) {
        write_evaluation_csv(report, std::cout);
      } else {
        auto out = open_out(ev_out);
        write_evaluation_csv(report, out);
      }
    } else if (ex->parsed()) {
      return run_experiment(ea);
    }
  } catch (const Error& e) {
    report_error(std::string(to_string(e.kind())), e.element(), e.what());
    return kExitError;
  } catch (const std::exception& e) {
    report_error("internal", "", e.what());
    return kExitError;
  }
  return 0;
}
