#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "outpost/error.hpp"
#include "outpost/shortest_paths.hpp"
#include "outpost/solver.hpp"

namespace outpost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double prune_slack(double incumbent) { return 1e-9 * std::max(1.0, std::abs(incumbent)); }

struct SearchNode {
  double bound;
  int depth;
  std::vector<int> open;
  int next;  // first undecided position in the candidate order

  bool operator<(const SearchNode& o) const {
    // priority_queue pops the largest: smallest bound first, then deepest
    if (bound != o.bound) return bound > o.bound;
    return depth < o.depth;
  }
};

class Search {
 public:
  Search(WorstCaseEvaluator& eval, std::span<const double> costs, double budget, BudgetMode mode,
         int p, const BranchAndBoundOptions& opts)
      : eval_(eval), p_(p), opts_(opts) {
    const auto& g = eval.graph();
    n_ = g.node_count();
    std::vector<double> bound_costs(costs.begin(), costs.end());
    if (mode == BudgetMode::kPerEdge) {
      for (double& c : bound_costs) c += budget;
    }
    dist_ = all_pairs_distances(g, bound_costs);
    fixed_ = opts.fixed;
    std::sort(fixed_.begin(), fixed_.end());

    // Candidates by single-facility cost on the mean demand, cheapest first.
    std::vector<double> mean(n_, 0.0);
    for (int k = 0; k < eval.scenario_count(); ++k) {
      const auto d = eval.demand(k);
      for (int j = 0; j < n_; ++j) mean[j] += d[j];
    }
    std::vector<double> single(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (mean[j] > 0.0) single[i] += mean[j] * dist_[i][j];
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (!std::binary_search(fixed_.begin(), fixed_.end(), v)) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return single[a] < single[b]; });
  }

  BranchAndBoundResult run() {
    seed_incumbent();
    std::priority_queue<SearchNode> queue;
    queue.push({0.0, 0, fixed_, 0});
    while (!queue.empty()) {
      SearchNode node = queue.top();
      queue.pop();
      if (node.bound >= best_ - prune_slack(best_)) continue;
      if (++nodes_ > opts_.max_nodes) {
        throw Error(ErrorKind::kCapacityExceeded, "search",
                    "exact search exceeded " + std::to_string(opts_.max_nodes) +
                        " nodes; use sgen or hsgen for this instance");
      }
      const int slots = p_ - static_cast<int>(node.open.size());
      const int left = static_cast<int>(order_.size()) - node.next;
      if (slots == 0 || left == slots) {
        finish(node.open, node.next);
        continue;
      }
      const int c = order_[node.next];
      SearchNode with{0.0, node.depth + 1, node.open, node.next + 1};
      with.open.insert(std::upper_bound(with.open.begin(), with.open.end(), c), c);
      branch(std::move(with), queue);
      if (left - 1 >= slots) branch({0.0, node.depth + 1, std::move(node.open), node.next + 1}, queue);
    }
    BranchAndBoundResult r;
    r.outposts = OutpostSet(best_set_, n_);
    r.value = best_;
    r.nodes = nodes_;
    return r;
  }

 private:
  // Completes `open` with every remaining candidate when no choice is left.
  void finish(std::vector<int> open, int next) {
    const int slots = p_ - static_cast<int>(open.size());
    for (int i = 0; i < slots; ++i) open.push_back(order_[next + i]);
    std::sort(open.begin(), open.end());
    offer(open);
  }

  void offer(const std::vector<int>& open) {
    const double v = eval_.worst(open, best_);
    if (v < best_) {
      best_ = v;
      best_set_ = open;
    }
  }

  void branch(SearchNode child, std::priority_queue<SearchNode>& queue) {
    const int slots = p_ - static_cast<int>(child.open.size());
    const int left = static_cast<int>(order_.size()) - child.next;
    if (slots == 0 || left == slots) {
      finish(std::move(child.open), child.next);
      return;
    }
    const double cut = best_ - prune_slack(best_);
    std::vector<int> all = child.open;
    all.insert(all.end(), order_.begin() + child.next, order_.end());
    std::sort(all.begin(), all.end());
    double bound = eval_.worst(all, cut);
    if (bound >= cut) return;
    bound = std::max(bound, median_bound(child.open, all, slots, cut));
    if (bound >= cut) return;
    child.bound = bound;
    queue.push(std::move(child));
  }

  // Budget-free routing cost lower bound. Open nodes are O plus `slots`
  // picks from U = all \ O; a node j outside the picks is at least m_j away
  // from the open set, where m_j is its distance to all \ {j}.
  double median_bound(const std::vector<int>& open, const std::vector<int>& all, int slots,
                      double cut) {
    std::vector<double> m(n_, kInf);
    std::vector<char> undecided(n_, 0);
    for (int v : all) undecided[v] = 1;
    for (int v : open) undecided[v] = 0;
    for (int j = 0; j < n_; ++j) {
      for (int i : all) {
        if (i == j) {
          if (!undecided[j]) m[j] = 0.0;
          continue;
        }
        m[j] = std::min(m[j], dist_[i][j]);
      }
    }
    double best = 0.0;
    std::vector<double> picks;
    for (int k = 0; k < eval_.scenario_count(); ++k) {
      const auto d = eval_.demand(k);
      double fixed_part = 0.0;
      picks.clear();
      for (int j = 0; j < n_; ++j) {
        if (d[j] <= 0.0) continue;
        const double term = d[j] * m[j];
        if (undecided[j]) {
          picks.push_back(term);
        } else {
          fixed_part += term;
        }
      }
      if (static_cast<int>(picks.size()) > slots) {
        std::nth_element(picks.begin(), picks.begin() + slots, picks.end(), std::greater<>());
        for (std::size_t i = slots; i < picks.size(); ++i) fixed_part += picks[i];
      }
      best = std::max(best, fixed_part);
      if (best >= cut) break;
    }
    return best;
  }

  // Greedy additions followed by single swaps give the first incumbent.
  void seed_incumbent() {
    if (opts_.incumbent && opts_.incumbent->size() == p_) {
      std::vector<int> s(opts_.incumbent->ids().begin(), opts_.incumbent->ids().end());
      bool keeps_fixed = std::includes(s.begin(), s.end(), fixed_.begin(), fixed_.end());
      if (keeps_fixed) {
        best_ = eval_.worst(s);
        best_set_ = s;
        return;
      }
    }
    std::vector<int> cur = fixed_;
    while (static_cast<int>(cur.size()) < p_) {
      double top = kInf;
      int pick = -1;
      for (int c : order_) {
        if (std::binary_search(cur.begin(), cur.end(), c)) continue;
        auto trial = cur;
        trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
        // p-median style greedy on the worst case; unroutable sets stay at inf
        const double v = eval_.worst(trial, top);
        if (v < top || pick < 0) {
          top = v;
          pick = c;
        }
      }
      cur.insert(std::upper_bound(cur.begin(), cur.end(), pick), pick);
    }
    double cur_v = eval_.worst(cur);
    for (bool improved = true; improved;) {
      improved = false;
      for (std::size_t i = 0; i < cur.size() && !improved; ++i) {
        if (std::binary_search(fixed_.begin(), fixed_.end(), cur[i])) continue;
        for (int c : order_) {
          if (std::binary_search(cur.begin(), cur.end(), c)) continue;
          auto trial = cur;
          trial.erase(trial.begin() + static_cast<long>(i));
          trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
          const double v = eval_.worst(trial, cur_v);
          if (v < cur_v - prune_slack(cur_v)) {
            cur = std::move(trial);
            cur_v = v;
            improved = true;
            break;
          }
        }
      }
    }
    best_ = cur_v;
    best_set_ = cur;
  }

  WorstCaseEvaluator& eval_;
  int p_;
  int n_ = 0;
  const BranchAndBoundOptions& opts_;
  std::vector<std::vector<double>> dist_;
  std::vector<int> fixed_;
  std::vector<int> order_;
  double best_ = kInf;
  std::vector<int> best_set_;
  long nodes_ = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

BranchAndBoundResult branch_and_bound(WorstCaseEvaluator& eval, std::span<const double> costs,
                                      double budget, BudgetMode mode, int p,
                                      const BranchAndBoundOptions& opts) {
  const int n = eval.graph().node_count();
  if (p < 1 || p > n) {
    throw Error(ErrorKind::kInvalidArgument, "p",
                "outpost count " + std::to_string(p) + " must lie in [1, " + std::to_string(n) + "]");
  }
  if (static_cast<int>(opts.fixed.size()) > p) {
    throw Error(ErrorKind::kInvalidArgument, "fixed", "more fixed outposts than p");
  }
  return Search(eval, costs, budget, mode, p, opts).run();
}

Solution solve_deterministic(const RoadNetwork& net, std::span<const double> demand,
                             std::span<const double> costs, int p) {
  const auto t0 = std::chrono::steady_clock::now();
  if (p < 1 || p > net.node_count()) {
    throw Error(ErrorKind::kInvalidArgument, "p",
                "outpost count " + std::to_string(p) + " must lie in [1, " +
                    std::to_string(net.node_count()) + "]");
  }
  if (static_cast<int>(demand.size()) != net.node_count() ||
      static_cast<int>(costs.size()) != net.edge_count()) {
    throw Error(ErrorKind::kInvalidArgument, "demand", "demand or cost dimension mismatch");
  }
  std::vector<double> c(costs.begin(), costs.end());
  WorstCaseEvaluator eval(net.graph(), c, 0.0, BudgetMode::kTotal,
                          {std::vector<double>(demand.begin(), demand.end())});
  auto r = branch_and_bound(eval, c, 0.0, BudgetMode::kTotal, p);
  Solution sol;
  sol.outposts = r.outposts;
  sol.objective = sol.epigraph = r.value;
  sol.scenario_objectives = {r.value};
  sol.meta.method = "det";
  sol.meta.iterations = 1;
  sol.meta.generated = {0};
  sol.meta.lower_bounds = {r.value};
  sol.meta.nodes_explored = r.nodes;
  sol.meta.wall_seconds = seconds_since(t0);
  sol.meta.iteration_seconds = {sol.meta.wall_seconds};
  return sol;
}

Solution solve_milp(const RobustInstance& inst, const MilpLimits& limits) {
  const auto t0 = std::chrono::steady_clock::now();
  inst.validate();
  if (inst.network.node_count() > limits.max_nodes || inst.scenarios.size() > limits.max_scenarios) {
    throw Error(ErrorKind::kCapacityExceeded, "instance",
                "exact single-stage solve is limited to " + std::to_string(limits.max_nodes) +
                    " nodes and " + std::to_string(limits.max_scenarios) +
                    " scenarios; use sgen or hsgen");
  }
  std::vector<int> all(inst.scenarios.size());
  std::iota(all.begin(), all.end(), 0);
  auto eval = make_evaluator(inst, all);
  BranchAndBoundOptions opts;
  opts.max_nodes = limits.max_search_nodes;
  auto r = branch_and_bound(eval, inst.budget.base_costs, inst.budget.budget, inst.budget.mode,
                            inst.p, opts);
  Solution sol = evaluate_solution(inst, r.outposts);
  sol.meta.method = "milp";
  sol.meta.iterations = 1;
  sol.meta.generated = all;
  sol.meta.lower_bounds = {r.value};
  sol.meta.nodes_explored = r.nodes;
  sol.meta.wall_seconds = seconds_since(t0);
  sol.meta.iteration_seconds = {sol.meta.wall_seconds};
  return sol;
}

}  // namespace outpost
