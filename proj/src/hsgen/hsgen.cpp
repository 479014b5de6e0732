#include "outpost/hsgen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "outpost/error.hpp"
#include "outpost/shortest_paths.hpp"

namespace outpost {

void HsgenConfig::validate() const {
  if (starts < 1) throw Error(ErrorKind::kInvalidArgument, "starts", "starts must be >= 1");
  if (interchanges < 1) {
    throw Error(ErrorKind::kInvalidArgument, "interchanges", "interchanges must be >= 1");
  }
  if (!(tolerance >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "tolerance", "tolerance must be >= 0");
  }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::vector<int> swapped(std::vector<int> y, int out, int in) {
  y.erase(std::find(y.begin(), y.end(), out));
  y.insert(std::upper_bound(y.begin(), y.end(), in), in);
  return y;
}

// Best single server for the subgraph induced by `nodes` (sorted), judged on
// the evaluator's scenarios restricted to those nodes.
int part_median(const WorstCaseEvaluator& eval, std::span<const double> costs, double budget,
                BudgetMode mode, const std::vector<int>& nodes, int fallback) {
  if (nodes.size() == 1) return nodes.front();
  std::vector<int> arc_map;
  const Digraph sub = eval.graph().induced(nodes, &arc_map);
  std::vector<double> sub_costs;
  sub_costs.reserve(arc_map.size());
  for (int e : arc_map) sub_costs.push_back(costs[e]);
  std::vector<std::vector<double>> demands(eval.scenario_count(),
                                           std::vector<double>(nodes.size()));
  for (int k = 0; k < eval.scenario_count(); ++k) {
    const auto d = eval.demand(k);
    for (std::size_t i = 0; i < nodes.size(); ++i) demands[k][i] = d[nodes[i]];
  }
  WorstCaseEvaluator local(sub, std::move(sub_costs), budget, mode, std::move(demands));
  double best = kInf;
  int pick = fallback;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int v = static_cast<int>(i);
    const double z = local.worst(std::span<const int>(&v, 1), best);
    if (z < best) {
      best = z;
      pick = nodes[i];
    }
  }
  return pick;
}

class Restart {
 public:
  Restart(WorstCaseEvaluator& eval, std::span<const double> costs, double budget, BudgetMode mode,
          int p, const HsgenConfig& cfg, std::vector<int> fixed, std::uint64_t seed)
      : eval_(eval), costs_(costs), budget_(budget), mode_(mode), p_(p), cfg_(cfg),
        fixed_(std::move(fixed)) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    rng_.seed(seq);
    n_ = eval.graph().node_count();
  }

  // Random start holding the fixed nodes.
  std::vector<int> random_start() {
    std::vector<int> free;
    for (int v = 0; v < n_; ++v) {
      if (!contains(fixed_, v)) free.push_back(v);
    }
    std::vector<int> y = fixed_;
    const int need = p_ - static_cast<int>(y.size());
    for (int i = 0; i < need; ++i) {
      std::uniform_int_distribution<int> pick(i, static_cast<int>(free.size()) - 1);
      std::swap(free[i], free[pick(rng_)]);
      y.push_back(free[i]);
    }
    std::sort(y.begin(), y.end());
    return y;
  }

  // Warm start: fixed nodes, then the warm set's own nodes, then random fill.
  std::vector<int> warm_start(const OutpostSet& warm) {
    std::vector<int> y = fixed_;
    for (int v : warm.ids()) {
      if (static_cast<int>(y.size()) == p_) break;
      if (v < n_ && std::find(y.begin(), y.end(), v) == y.end()) y.push_back(v);
    }
    std::sort(y.begin(), y.end());
    std::vector<int> free;
    for (int v = 0; v < n_; ++v) {
      if (!contains(y, v)) free.push_back(v);
    }
    std::shuffle(free.begin(), free.end(), rng_);
    for (std::size_t i = 0; static_cast<int>(y.size()) < p_; ++i) y.push_back(free[i]);
    std::sort(y.begin(), y.end());
    return y;
  }

  MasterResult run(std::vector<int> y) {
    y_ = std::move(y);
    cur_ = eval_.worst(y_);
    descent_.push_back(cur_);
    if (static_cast<int>(fixed_.size()) < p_ && p_ < n_) {
      interchange();
      for (int round = 0; round < 1000; ++round) {
        alternate();
        if (!interchange()) break;
      }
    }
    return {OutpostSet(y_, n_), cur_};
  }

  std::vector<double>& descent() { return descent_; }

 private:
  bool accept(std::vector<int> candidate) {
    const double cut = cur_ - cfg_.tolerance;
    const double v = eval_.worst(candidate, cut);
    if (v < cut) {
      y_ = std::move(candidate);
      cur_ = v;
      descent_.push_back(cur_);
      return true;
    }
    return false;
  }

  // Up to `interchanges` random (out, in) swaps, drawn without replacement
  // among the pairs of the current set.
  bool interchange() {
    bool any = false;
    int budget = cfg_.interchanges;
    while (budget > 0) {
      std::vector<int> outs, ins;
      for (int v : y_) {
        if (!contains(fixed_, v)) outs.push_back(v);
      }
      for (int v = 0; v < n_; ++v) {
        if (!contains(y_, v)) ins.push_back(v);
      }
      if (outs.empty() || ins.empty()) return any;
      std::vector<int> pairs(outs.size() * ins.size());
      std::iota(pairs.begin(), pairs.end(), 0);
      bool moved = false;
      for (std::size_t t = 0; t < pairs.size() && budget > 0; ++t) {
        std::uniform_int_distribution<std::size_t> pick(t, pairs.size() - 1);
        std::swap(pairs[t], pairs[pick(rng_)]);
        --budget;
        const int out = outs[pairs[t] / ins.size()];
        const int in = ins[pairs[t] % ins.size()];
        if (accept(swapped(y_, out, in))) {
          moved = any = true;
          break;
        }
      }
      if (!moved) break;
    }
    return any;
  }

  // Shortest-path partition around the outposts, robust 1-median per part.
  // The recombined set is kept if it improves; otherwise single relocations
  // are tried in outpost order.
  bool alternate() {
    bool any = false;
    for (int round = 0; round < n_; ++round) {
      const auto tree = multi_source_shortest_paths(eval_.graph(), y_, costs_);
      std::vector<int> proposal = y_;
      std::vector<std::pair<int, int>> moves;
      for (int o : y_) {
        if (contains(fixed_, o)) continue;
        std::vector<int> part;
        for (int v = 0; v < n_; ++v) {
          if (tree.nearest_source[v] == o) part.push_back(v);
        }
        const int m = part_median(eval_, costs_, budget_, mode_, part, o);
        if (m != o) moves.emplace_back(o, m);
      }
      if (moves.empty()) break;
      for (auto [o, m] : moves) proposal = swapped(std::move(proposal), o, m);
      if (accept(proposal)) {
        any = true;
        continue;
      }
      bool single = false;
      for (auto [o, m] : moves) {
        if (moves.size() > 1 && accept(swapped(y_, o, m))) {
          single = true;
          break;
        }
      }
      if (!single) break;
      any = true;
    }
    return any;
  }

  WorstCaseEvaluator& eval_;
  std::span<const double> costs_;
  double budget_;
  BudgetMode mode_;
  int p_;
  int n_ = 0;
  const HsgenConfig& cfg_;
  std::vector<int> fixed_;
  std::mt19937_64 rng_;
  std::vector<int> y_;
  double cur_ = kInf;
  std::vector<double> descent_;
};

std::vector<int> checked_fixed(std::span<const int> fixed, int p, int n) {
  std::vector<int> f(fixed.begin(), fixed.end());
  std::sort(f.begin(), f.end());
  if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
    throw Error(ErrorKind::kInvalidArgument, "fixed", "duplicate fixed outpost");
  }
  for (int v : f) {
    if (v < 0 || v >= n) {
      throw Error(ErrorKind::kInvalidArgument, "node " + std::to_string(v),
                  "fixed outpost " + std::to_string(v) + " is not a network node");
    }
  }
  if (static_cast<int>(f.size()) > p) {
    throw Error(ErrorKind::kInvalidArgument, "fixed",
                std::to_string(f.size()) + " fixed outposts exceed p = " + std::to_string(p));
  }
  return f;
}

}  // namespace

MasterResult hsgen_search(WorstCaseEvaluator& eval, std::span<const double> costs, double budget,
                          BudgetMode mode, int p, const HsgenConfig& cfg,
                          std::span<const int> fixed, HsgenStats* stats) {
  cfg.validate();
  const int n = eval.graph().node_count();
  if (p < 1 || p > n) {
    throw Error(ErrorKind::kInvalidArgument, "p",
                "outpost count " + std::to_string(p) + " must lie in [1, " + std::to_string(n) + "]");
  }
  const auto base_fixed = checked_fixed(fixed, p, n);
  std::vector<std::vector<int>> per_restart;
  for (const auto& f : cfg.restart_fixed) per_restart.push_back(checked_fixed(f, p, n));

  const long solved_before = eval.subproblems_solved();
  const int warm = static_cast<int>(cfg.warm_starts.size());
  MasterResult best{OutpostSet(), kInf};
  bool have = false;
  for (int r = 0; r < cfg.starts + warm; ++r) {
    const auto& f = per_restart.empty() ? base_fixed : per_restart[r % per_restart.size()];
    Restart restart(eval, costs, budget, mode, p, cfg, f,
                    cfg.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(r));
    auto start = r < cfg.starts ? restart.random_start() : restart.warm_start(cfg.warm_starts[r - cfg.starts]);
    auto result = restart.run(std::move(start));
    if (stats) stats->descents.push_back(std::move(restart.descent()));
    if (!have || result.value < best.value ||
        (result.value == best.value && result.outposts < best.outposts)) {
      best = std::move(result);
      have = true;
    }
  }
  if (stats) {
    stats->subproblems += eval.subproblems_solved() - solved_before;
    ++stats->master_calls;
  }
  return best;
}

Solution hsgen_solve(const RobustInstance& inst, const HsgenConfig& cfg,
                     const std::vector<int>& fixed, HsgenStats* stats) {
  inst.validate();
  std::vector<int> all(inst.scenarios.size());
  std::iota(all.begin(), all.end(), 0);
  auto eval = make_evaluator(inst, all);
  auto r = hsgen_search(eval, inst.budget.base_costs, inst.budget.budget, inst.budget.mode, inst.p,
                        cfg, fixed, stats);
  Solution sol = evaluate_solution(inst, r.outposts);
  sol.meta.method = "hsgen-direct";
  sol.meta.iterations = 1;
  sol.meta.generated = all;
  sol.meta.lower_bounds = {r.value};
  return sol;
}

int robust_1median(const RobustInstance& inst, std::span<const int> nodes,
                   std::span<const int> scenario_ids) {
  if (nodes.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "nodes", "robust 1-median needs a nonempty node set");
  }
  std::vector<int> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  auto eval = make_evaluator(inst, scenario_ids);
  return part_median(eval, inst.budget.base_costs, inst.budget.budget, inst.budget.mode, sorted,
                     sorted.front());
}

MasterSolver heuristic_master(const RobustInstance& inst, const HsgenConfig& cfg,
                              std::vector<int> fixed, HsgenStats* stats) {
  cfg.validate();
  return [&inst, cfg, fixed = std::move(fixed), stats](std::span<const int> subset,
                                                       const std::optional<OutpostSet>& previous) {
    auto eval = make_evaluator(inst, subset);
    HsgenConfig c = cfg;
    if (previous) c.warm_starts.push_back(*previous);
    return hsgen_search(eval, inst.budget.base_costs, inst.budget.budget, inst.budget.mode, inst.p,
                        c, fixed, stats);
  };
}

Solution solve_hsgen(const RobustInstance& inst, const HsgenConfig& cfg,
                     const std::vector<int>& fixed, HsgenStats* stats, const SgenOptions& opts) {
  auto sol = sgen(inst, heuristic_master(inst, cfg, fixed, stats), opts);
  sol.meta.method = "hsgen";
  return sol;
}

}  // namespace outpost
