#include "outpost/sampling.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "outpost/error.hpp"

namespace outpost {

TriangleDistribution::TriangleDistribution(double lo, double peak, double hi)
    : lo_(lo), peak_(peak), hi_(hi) {
  if (!(lo <= peak && peak <= hi)) {
    throw Error(ErrorKind::kInvalidArgument, "triangle", "triangle requires lo <= peak <= hi");
  }
}

double TriangleDistribution::quantile(double u) const {
  const double width = hi_ - lo_;
  if (width <= 0.0) return lo_;
  const double split = (peak_ - lo_) / width;
  double x;
  if (u < split) {
    x = lo_ + std::sqrt(u * width * (peak_ - lo_));
  } else {
    x = hi_ - std::sqrt((1.0 - u) * width * (hi_ - peak_));
  }
  return std::clamp(x, lo_, hi_);
}

double TriangleDistribution::operator()(Rng& rng) const {
  if (hi_ - lo_ <= 0.0) return lo_;
  return quantile(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

double TriangleDistribution::cdf(double x) const {
  if (x <= lo_) return x < lo_ ? 0.0 : (hi_ == lo_ ? 1.0 : 0.0);
  if (x >= hi_) return 1.0;
  const double width = hi_ - lo_;
  if (x <= peak_) return (x - lo_) * (x - lo_) / (width * (peak_ - lo_));
  return 1.0 - (hi_ - x) * (hi_ - x) / (width * (hi_ - peak_));
}

TruncatedNormal::TruncatedNormal(double mean, double sd, double lo, double hi)
    : mean_(mean), sd_(sd), lo_(lo), hi_(hi) {
  if (!(sd >= 0.0) || !(lo <= hi)) {
    throw Error(ErrorKind::kInvalidArgument, "truncated_normal", "invalid truncated normal");
  }
  if (sd_ > 0.0) {
    const boost::math::normal_distribution<double> base(mean_, sd_);
    cdf_lo_ = boost::math::cdf(base, lo_);
    mass_ = boost::math::cdf(base, hi_) - cdf_lo_;
  }
}

double TruncatedNormal::inverse_cdf(double u) const {
  const boost::math::normal_distribution<double> base(mean_, sd_);
  const double p = std::clamp(cdf_lo_ + u * mass_, 1e-300, 1.0 - 1e-16);
  return std::clamp(boost::math::quantile(base, p), lo_, hi_);
}

double TruncatedNormal::operator()(Rng& rng) const {
  if (sd_ == 0.0) return std::clamp(mean_, lo_, hi_);
  if (mass_ >= 0.01) {
    std::normal_distribution<double> normal(mean_, sd_);
    for (;;) {
      const double x = normal(rng);
      if (x >= lo_ && x <= hi_) return x;
    }
  }
  return inverse_cdf(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
}

double TruncatedNormal::cdf(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return 1.0;
  if (sd_ == 0.0) return x >= mean_ ? 1.0 : 0.0;
  const boost::math::normal_distribution<double> base(mean_, sd_);
  return (boost::math::cdf(base, x) - cdf_lo_) / mass_;
}

}  // namespace outpost
