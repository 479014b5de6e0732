#pragma once

#include <random>

namespace outpost {

using Rng = std::mt19937_64;

// Triangle distribution on [lo, hi] with mode `peak`. Degenerate supports
// (lo == hi) return lo exactly.
class TriangleDistribution {
 public:
  TriangleDistribution(double lo, double peak, double hi);

  double operator()(Rng& rng) const;
  double quantile(double u) const;
  double cdf(double x) const;
  double mean() const { return (lo_ + peak_ + hi_) / 3.0; }

 private:
  double lo_, peak_, hi_;
};

// Normal(mean, sd) truncated to [lo, hi]. Samples by rejection while the
// acceptance probability is at least 1%, otherwise by inverse CDF on the
// truncated interval. sd == 0 returns the mean clamped into [lo, hi].
class TruncatedNormal {
 public:
  TruncatedNormal(double mean, double sd, double lo = 0.0, double hi = 1.0);

  double operator()(Rng& rng) const;
  double cdf(double x) const;
  double acceptance() const { return mass_; }

 private:
  double inverse_cdf(double u) const;

  double mean_, sd_, lo_, hi_;
  double cdf_lo_ = 0.0;
  double mass_ = 1.0;
};

}  // namespace outpost
