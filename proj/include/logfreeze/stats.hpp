#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "logfreeze/rng.hpp"

namespace logfreeze::stats {

class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::vector<double> samples);
  const std::vector<double>& sorted() const { return x_; }
  std::size_t n() const { return x_.size(); }
  // fraction of samples <= t
  double cdf(double t) const;
  double quantile(double p) const;

 private:
  std::vector<double> x_;
};

// sup |F_n - F| over the sample points (both one-sided limits); ties handled
// by jumping over equal values at once.
double ks_distance(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf);
double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

struct MeanSe {
  double mean;
  double se;
  std::size_t n;
};
MeanSe mean_se(const std::vector<double>& x);

// unbiased k-statistics k_1..k_order, order <= 4
std::vector<double> sample_cumulants(const std::vector<double>& x, int order = 4);

struct SlopeFit {
  double slope;
  double intercept;
  double slope_se;
  double intercept_se;
};
// Weighted least squares; weights default to 1. The SEs use the residual
// variance (zero for an exact fit).
SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& weights = {});

double bootstrap_se(const std::vector<double>& x, const std::function<double(const std::vector<double>&)>& statistic,
                    int n_resamples, const Seed& seed);

struct TailFit {
  double exponent;  // density ~ x^{-exponent}
  double se;
  std::size_t n_bins;
  std::size_t n_tail;
};
// Logarithmic bins on [lo, hi], merged left to right until each holds at
// least min_count samples; fit of log density against log x weighted by counts.
TailFit fit_power_tail(const std::vector<double>& samples, double lo, double hi, std::size_t n_bins = 24,
                       std::size_t min_count = 20);

struct GumbelFit {
  double location;
  double scale;
};
// maximum likelihood for F(r) = exp(-e^{-(r - location)/scale})
GumbelFit fit_gumbel(const std::vector<double>& x);

// One multiplicative rescale about the sample mean so the sample variance
// equals target.
std::vector<double> normalize_variance(const std::vector<double>& x, double target);

}  // namespace logfreeze::stats
