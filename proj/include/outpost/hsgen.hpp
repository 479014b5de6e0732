#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "outpost/solver.hpp"

namespace outpost {

struct HsgenConfig {
  int starts = 10;
  int interchanges = 10;   // random swaps tried per interchange phase
  std::uint64_t seed = 1;
  double tolerance = 1e-9;  // absolute improvement needed to accept a move
  // Extra restarts that begin from these sets instead of a random draw.
  std::vector<OutpostSet> warm_starts;
  // When non-empty, restart r keeps restart_fixed[r % size] fixed instead of
  // the caller's fixed set (used to reposition a random subset per restart).
  std::vector<std::vector<int>> restart_fixed;

  void validate() const;
};

// Objective after every accepted move, one list per restart.
struct HsgenStats {
  std::vector<std::vector<double>> descents;
  long subproblems = 0;
  int master_calls = 0;
};

// Heuristic for min over |y| = p of the worst case held by `eval`: random
// starts, random interchanges and shortest-path partitions with robust
// 1-medians. Best restart wins by (objective, lexicographic set).
MasterResult hsgen_search(WorstCaseEvaluator& eval, std::span<const double> costs, double budget,
                          BudgetMode mode, int p, const HsgenConfig& cfg,
                          std::span<const int> fixed = {}, HsgenStats* stats = nullptr);

// Heuristic over all scenarios of the instance, without scenario generation.
Solution hsgen_solve(const RobustInstance& inst, const HsgenConfig& cfg,
                     const std::vector<int>& fixed = {}, HsgenStats* stats = nullptr);

// Node of `nodes` minimizing the worst case over the listed scenarios when it
// serves the subgraph induced by `nodes` alone (demand outside is dropped).
// Lowest id wins ties.
int robust_1median(const RobustInstance& inst, std::span<const int> nodes,
                   std::span<const int> scenario_ids);

// Scenario generation with hsgen_search as the master ("HSGen"). Each master
// call is also warm-started from the previous master's outposts.
MasterSolver heuristic_master(const RobustInstance& inst, const HsgenConfig& cfg,
                              std::vector<int> fixed = {}, HsgenStats* stats = nullptr);
Solution solve_hsgen(const RobustInstance& inst, const HsgenConfig& cfg,
                     const std::vector<int>& fixed = {}, HsgenStats* stats = nullptr,
                     const SgenOptions& opts = {});

}  // namespace outpost
