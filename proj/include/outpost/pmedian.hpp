#pragma once

#include <span>
#include <vector>

#include "outpost/network.hpp"
#include "outpost/outposts.hpp"

namespace outpost {

// Classic p-median assignment. facility_of[j] = i means x_ij = 1; a facility
// i satisfies facility_of[i] == i. `times` holds t_ij row-major (n x n) with
// t_ii = 0.
struct PMedianAssignment {
  int node_count = 0;
  std::vector<int> facility_of;
  std::vector<double> times;

  bool x(int i, int j) const { return facility_of[j] == i; }
  double t(int i, int j) const { return times[static_cast<std::size_t>(i) * node_count + j]; }
  OutpostSet facilities() const;
  // sum_ij x_ij d_j t_ij
  double objective(std::span<const double> demand) const;
};

// sum_e c_e f_e
double flow_cost(std::span<const double> costs, std::span<const double> flows);

// Checks (y, f) against the flow formulation with alpha = sum(d):
// A f <= alpha*y - d, f >= 0. Returns the first violated node or -1.
int first_nff_violation(const RoadNetwork& net, const OutpostSet& y, std::span<const double> flows,
                        std::span<const double> demand, double tol = 1e-9);

// Flow solution -> p-median assignment: each node goes to its cost-nearest
// outpost (lowest id on ties). Throws kInfeasible if (y, f) violates the
// flow formulation.
PMedianAssignment nff_to_pmedian(const RoadNetwork& net, const OutpostSet& y,
                                 std::span<const double> flows, std::span<const double> demand);

// P-median assignment -> flow solution: y_i = x_ii and f superposes d_j units
// along a shortest facility_of[j] -> j path for every j. Throws kInfeasible if
// x violates the p-median constraints.
std::pair<OutpostSet, FlowVector> pmedian_to_nff(const RoadNetwork& net,
                                                 const PMedianAssignment& x,
                                                 std::span<const double> demand);

// Nearest-facility assignment for a given set of facilities.
PMedianAssignment assign_to_nearest(const RoadNetwork& net, const OutpostSet& facilities);

}  // namespace outpost
