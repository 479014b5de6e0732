#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace outpost::testing {

// One-sample Kolmogorov-Smirnov statistic sup |F_n(x) - F(x)|.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

// Asymptotic critical value at alpha = 0.01.
inline double ks_critical_01(std::size_t n) { return 1.6276 / std::sqrt(static_cast<double>(n)); }

}  // namespace outpost::testing
