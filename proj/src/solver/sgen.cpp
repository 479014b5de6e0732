#include <algorithm>
#include <chrono>
#include <cmath>

#include "outpost/error.hpp"
#include "outpost/solver.hpp"

namespace outpost {

MasterSolver exact_master(const RobustInstance& inst, const MilpLimits& limits) {
  if (inst.network.node_count() > limits.max_nodes) {
    throw Error(ErrorKind::kCapacityExceeded, "instance",
                "exact master is limited to " + std::to_string(limits.max_nodes) +
                    " nodes; use the heuristic master");
  }
  return [&inst, limits](std::span<const int> subset, const std::optional<OutpostSet>&) {
    // Solved from scratch every iteration.
    auto eval = make_evaluator(inst, subset);
    BranchAndBoundOptions opts;
    opts.max_nodes = limits.max_search_nodes;
    auto r = branch_and_bound(eval, inst.budget.base_costs, inst.budget.budget, inst.budget.mode,
                              inst.p, opts);
    return MasterResult{r.outposts, r.value};
  };
}

Solution sgen(const RobustInstance& inst, const MasterSolver& master, const SgenOptions& opts) {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  inst.validate();
  std::vector<int> subset{0};
  std::optional<OutpostSet> previous;
  SolveMetadata meta;
  Solution priced;
  for (int iter = 1;; ++iter) {
    const auto ti = Clock::now();
    MasterResult m = master(subset, previous);
    priced = evaluate_solution(inst, m.outposts);
    const int k_star = priced.binding_scenario;
    const double worst = priced.objective;
    meta.iterations = iter;
    meta.lower_bounds.push_back(m.value);
    meta.iteration_seconds.push_back(std::chrono::duration<double>(Clock::now() - ti).count());
    if (opts.on_iteration) opts.on_iteration(iter, m.value, worst, k_star);
    previous = m.outposts;
    const bool converged = m.value >= worst - opts.tolerance * std::abs(worst);
    const bool known = std::find(subset.begin(), subset.end(), k_star) != subset.end();
    if (converged || known || iter >= opts.max_iterations) break;
    subset.push_back(k_star);
  }
  meta.generated = subset;
  meta.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  meta.method = "sgen";
  priced.meta = std::move(meta);
  return priced;
}

}  // namespace outpost
