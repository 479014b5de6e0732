#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "oracles.hpp"
#include "outpost/error.hpp"
#include "outpost/hsgen.hpp"

using namespace outpost;
using namespace outpost::testing;

namespace {

DemandScenarioSet random_scenarios(int n, int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::vector<double>> s(count, std::vector<double>(n));
  for (auto& d : s)
    for (double& v : d) v = u(rng) < 0.2 ? 0.0 : 40.0 * u(rng);
  return DemandScenarioSet(s);
}

}  // namespace

TEST_CASE("hsgen trivial cases") {
  std::mt19937_64 rng(1);
  auto net = random_network(7, 18, 2);
  auto scen = random_scenarios(7, 3, rng);
  RobustInstance all(net, scen, TravelBudget::for_network(net, 20), 7);
  CHECK(solve_hsgen(all, {}).objective == 0.0);

  RobustInstance two(net, scen, TravelBudget::for_network(net, 20), 2);
  auto pinned = hsgen_solve(two, {}, {5, 1});
  CHECK(pinned.outposts == OutpostSet({1, 5}, 7));
  CHECK(pinned.objective == doctest::Approx(evaluate_solution(two, OutpostSet({1, 5}, 7)).objective));

  CHECK_THROWS_AS(hsgen_solve(two, {}, {1, 2, 3}), Error);
  HsgenConfig bad;
  bad.starts = 0;
  CHECK_THROWS_AS(hsgen_solve(two, bad), Error);
}

TEST_CASE("robust 1-median") {
  auto path = make_undirected(3, {{0, 1, 1}, {1, 2, 1}});
  RobustInstance inst(path, DemandScenarioSet({{1, 1, 1}}), TravelBudget::for_network(path, 0), 1);
  std::vector<int> nodes{0, 1, 2}, ks{0};
  CHECK(robust_1median(inst, nodes, ks) == 1);
  std::vector<int> single{2};
  CHECK(robust_1median(inst, single, ks) == 2);

  std::mt19937_64 rng(2);
  auto net = random_network(20, 60, 3);
  RobustInstance big(net, random_scenarios(20, 5, rng), TravelBudget::for_network(net, 30), 1);
  std::vector<int> part(15);
  std::iota(part.begin(), part.end(), 3);
  std::vector<int> all_k{0, 1, 2, 3, 4};
  const int got = robust_1median(big, part, all_k);
  // independent enumeration on the induced subgraph
  std::vector<int> arc_map;
  auto sub = net.graph().induced(part, &arc_map);
  std::vector<double> c;
  for (int e : arc_map) c.push_back(net.base_costs()[e]);
  double best = kInf;
  int want = -1;
  for (std::size_t i = 0; i < part.size(); ++i) {
    double w = 0.0;
    for (int k = 0; k < 5; ++k) {
      std::vector<double> d;
      for (int v : part) d.push_back(big.scenarios.scenario(k)[v]);
      std::vector<int> y{static_cast<int>(i)};
      w = std::max(w, solve_routing(sub, c, y, d, 30, BudgetMode::kTotal).objective);
    }
    if (w < best) {
      best = w;
      want = part[i];
    }
  }
  CHECK(got == want);
}

TEST_CASE("hsgen is deterministic and descends monotonically") {
  std::mt19937_64 rng(3);
  auto net = random_network(20, 55, 8);
  RobustInstance inst(net, random_scenarios(20, 8, rng), TravelBudget::for_network(net, 100), 3);
  HsgenConfig cfg;
  cfg.seed = 17;
  HsgenStats stats;
  auto a = solve_hsgen(inst, cfg, {}, &stats);
  auto b = solve_hsgen(inst, cfg);
  CHECK(a.outposts == b.outposts);
  CHECK(a.objective == b.objective);
  CHECK(stats.master_calls == a.meta.iterations);
  for (const auto& d : stats.descents) {
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] < d[i - 1]);
  }
  CHECK(a.objective >= solve_milp(inst).objective * (1 - 1e-9));
}

TEST_CASE("hsgen finds the single-outpost optimum") {
  std::mt19937_64 rng(4);
  int hits = 0;
  for (int it = 0; it < 5; ++it) {
    auto net = random_network(15, 40, 20 + it);
    RobustInstance inst(net, random_scenarios(15, 10, rng), TravelBudget::for_network(net, 50), 1);
    HsgenConfig cfg;
    cfg.seed = it;
    const double h = solve_hsgen(inst, cfg).objective;
    const double e = solve_milp(inst).objective;
    CHECK(h >= e * (1 - 1e-9));
    if (h <= e * (1 + 1e-6)) ++hits;
  }
  CHECK(hits >= 4);
}

TEST_CASE("warm starts never lose to their seed set") {
  std::mt19937_64 rng(5);
  auto net = random_network(18, 50, 9);
  RobustInstance inst(net, random_scenarios(18, 6, rng), TravelBudget::for_network(net, 200), 3);
  OutpostSet seed_set({0, 5, 9}, 18);
  HsgenConfig cfg;
  cfg.starts = 1;
  cfg.warm_starts = {seed_set};
  auto sol = hsgen_solve(inst, cfg);
  CHECK(sol.objective <= evaluate_solution(inst, seed_set).objective);
}
