#include <doctest.h>

#include <random>

#include "builders.hpp"
#include "oracles.hpp"
#include "outpost/error.hpp"
#include "outpost/evaluate.hpp"
#include "outpost/pmedian.hpp"
#include "outpost/shortest_paths.hpp"
#include "outpost/subproblem.hpp"

using namespace outpost;
using namespace outpost::testing;

namespace {

// s=0, a=1, b=2, t=3; forward arcs 0..3 cost 1, return arcs so the graph is
// strongly connected.
RoadNetwork diamond() {
  return make_network(4, {{0, 1, 1}, {1, 3, 1}, {0, 2, 1}, {2, 3, 1},
                          {1, 0, 1}, {3, 1, 1}, {2, 0, 1}, {3, 2, 1}});
}

std::vector<double> random_demand(int n, std::mt19937_64& rng, double zero_share = 0.3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> d(n);
  for (double& v : d) v = u(rng) < zero_share ? 0.0 : 50.0 * u(rng);
  return d;
}

std::vector<int> random_outposts(int n, int p, std::mt19937_64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(p);
  std::sort(all.begin(), all.end());
  return all;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("diamond splits flow under the total budget") {
  auto net = diamond();
  std::vector<double> d{0, 0, 0, 2};
  auto tb = TravelBudget::for_network(net, 6.0);
  auto r = solve_subproblem(net, OutpostSet({0}, 4), d, tb);
  CHECK(r.objective == doctest::Approx(10.0));
  CHECK(r.lambda == doctest::Approx(1.0));
  CHECK(r.flows[0] == doctest::Approx(1.0));
  CHECK(r.flows[2] == doctest::Approx(1.0));

  auto r0 = solve_subproblem(net, OutpostSet({0}, 4), d, TravelBudget::for_network(net, 0.0));
  CHECK(r0.objective == doctest::Approx(4.0));

  auto lp = routing_lp(net, net.base_costs(), {0}, d, 6.0, true);
  REQUIRE(lp.feasible);
  CHECK(lp.objective == doctest::Approx(10.0));
}

TEST_CASE("per-edge budget inflates costs") {
  auto net = make_network(2, {{0, 1, 5}, {1, 0, 5}});
  std::vector<double> d{0, 1};
  auto r = solve_subproblem(net, OutpostSet({0}, 2), d,
                            TravelBudget::for_network(net, 2.0, BudgetMode::kPerEdge));
  CHECK(r.objective == doctest::Approx(7.0));
}

TEST_CASE("trivial routing cases") {
  auto net = random_network(8, 20, 4);
  std::vector<double> d(8, 3.0);
  auto r = solve_subproblem(net, OutpostSet::all(8), d, TravelBudget::for_network(net, 100.0));
  CHECK(r.objective == 0.0);
  CHECK(r.lambda == 0.0);
  std::vector<double> zero(8, 0.0);
  CHECK(solve_subproblem(net, OutpostSet({1}, 8), zero, TravelBudget::for_network(net, 50.0))
            .objective == 0.0);
  CHECK_THROWS_AS(solve_subproblem(net, OutpostSet({1}, 8), d, TravelBudget::for_network(net, 1.0),
                                   10.0),
                  Error);
}

TEST_CASE("subproblem matches the LP oracle") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 60; ++it) {
    const int n = 4 + it % 8;
    const int m = std::min(n * (n - 1), n + static_cast<int>(rng() % (2 * n)));
    auto net = random_network(n, m, 500 + it);
    auto d = random_demand(n, rng);
    auto y = random_outposts(n, 1 + static_cast<int>(rng() % 2), rng);
    const double budget = std::vector<double>{0, 5, 40, 300, 5000}[it % 5];
    for (bool total : {true, false}) {
      auto tb = TravelBudget::for_network(net, budget, total ? BudgetMode::kTotal : BudgetMode::kPerEdge);
      auto r = solve_subproblem(net, OutpostSet(y, n), d, tb);
      auto lp = routing_lp(net, net.base_costs(), y, d, budget, total);
      REQUIRE(lp.feasible);
      CHECK_MESSAGE(relative_gap(r.objective, lp.objective) <= 1e-7,
                    "instance " << it << (total ? " total" : " peredge") << " got " << r.objective
                                << " want " << lp.objective);
      // the returned flow is feasible and priced consistently
      CHECK(first_nff_violation(net, OutpostSet(y, n), r.flows, d, 1e-7) == -1);
      double fmax = 0.0;
      for (double f : r.flows) fmax = std::max(fmax, f);
      if (total) {
        CHECK(r.lambda >= fmax - 1e-9);
        CHECK(relative_gap(flow_cost(net.base_costs(), r.flows) + budget * fmax, r.objective) <= 1e-9);
      }
    }
  }
}

TEST_CASE("budget structure: monotone and concave") {
  std::mt19937_64 rng(77);
  const std::vector<double> grid{0, 10, 50, 100, 250, 500, 1000};
  for (int it = 0; it < 6; ++it) {
    auto net = random_network(15, 45, 900 + it);
    auto d = random_demand(15, rng, 0.0);
    OutpostSet y(random_outposts(15, 2, rng), 15);
    std::vector<double> z;
    for (double b : grid) z.push_back(solve_subproblem(net, y, d, TravelBudget::for_network(net, b)).objective);
    for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] >= z[i - 1] - 1e-9 * z[i]);
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double mid = (grid[i] + grid[i + 1]) / 2.0;
      const double zm = solve_subproblem(net, y, d, TravelBudget::for_network(net, mid)).objective;
      CHECK(zm >= (z[i] + z[i + 1]) / 2.0 - 1e-9 * zm);
    }
    auto tree = multi_source_shortest_paths(net.graph(), y.ids(), net.base_costs());
    double sp = 0.0;
    for (int v = 0; v < 15; ++v) sp += d[v] * tree.distance[v];
    CHECK(z[0] == doctest::Approx(sp).epsilon(1e-12));
  }
}

TEST_CASE("scaling demand never lowers the per-trip cost") {
  std::mt19937_64 rng(8);
  auto net = random_network(12, 36, 31);
  auto d = random_demand(12, rng, 0.0);
  OutpostSet y({3}, 12);
  auto tb = TravelBudget::for_network(net, 200.0);
  double prev = 0.0, total = 0.0;
  for (double v : d) total += v;
  for (double s : {0.25, 0.5, 1.0, 2.0, 8.0}) {
    std::vector<double> ds(d);
    for (double& v : ds) v *= s;
    const double per_trip = solve_subproblem(net, y, ds, tb).objective / (s * total);
    CHECK(per_trip >= prev - 1e-9);
    prev = per_trip;
  }
  auto pe = TravelBudget::for_network(net, 200.0, BudgetMode::kPerEdge);
  std::vector<double> d3(d);
  for (double& v : d3) v *= 3.0;
  CHECK(solve_subproblem(net, y, d3, pe).objective ==
        doctest::Approx(3.0 * solve_subproblem(net, y, d, pe).objective).epsilon(1e-12));
}

TEST_CASE("evaluate_outposts") {
  auto line = make_undirected(4, {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}});
  DemandScenarioSet set({{0, 1, 1, 1}});
  auto rep = evaluate_outposts(line, OutpostSet({0}, 4), set, TravelBudget::for_network(line, 0.0));
  CHECK(rep.scenarios[0].mean_response_s == doctest::Approx(4.0));

  auto all = evaluate_outposts(line, OutpostSet::all(4), set, TravelBudget::for_network(line, 0.0));
  CHECK(all.scenarios[0].mean_response_s == 0.0);

  DemandScenarioSet with_zero({{0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 2}});
  auto rz = evaluate_outposts(line, OutpostSet({0}, 4), with_zero, TravelBudget::for_network(line, 0.0));
  CHECK(rz.scenarios[0].mean_response_s == 0.0);
  CHECK(rz.binding_scenario == 1);

  std::mt19937_64 rng(12);
  auto net = random_network(20, 50, 17);
  std::vector<std::vector<double>> ds;
  for (int k = 0; k < 10; ++k) ds.push_back(random_demand(20, rng));
  DemandScenarioSet scen(ds);
  auto y = random_outposts(20, 2, rng);
  auto ev = evaluate_outposts(net, OutpostSet(y, 20), scen, TravelBudget::for_network(net, 100.0));
  for (int k = 0; k < 10; ++k) {
    auto lp = routing_lp(net, net.base_costs(), y, ds[k], 100.0, true);
    CHECK(relative_gap(ev.scenarios[k].objective, lp.objective) <= 1e-7);
  }
}
