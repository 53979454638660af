#include "logfreeze/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/tools/roots.hpp>

#include "logfreeze/error.hpp"

namespace logfreeze::stats {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples) : x_(std::move(samples)) {
  for (double v : x_) {
    if (std::isnan(v)) throw DomainError("EmpiricalDistribution: NaN sample");
  }
  std::sort(x_.begin(), x_.end());
}

double EmpiricalDistribution::cdf(double t) const {
  if (x_.empty()) return 0.0;
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  return static_cast<double>(it - x_.begin()) / static_cast<double>(x_.size());
}

double EmpiricalDistribution::quantile(double p) const {
  if (x_.empty()) throw DomainError("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: p must lie in [0,1]");
  const double pos = p * static_cast<double>(x_.size() - 1);
  const std::size_t i = static_cast<std::size_t>(pos);
  if (i + 1 >= x_.size()) return x_.back();
  const double f = pos - static_cast<double>(i);
  return x_[i] * (1.0 - f) + x_[i + 1] * f;
}

double ks_distance(const EmpiricalDistribution& emp, const std::function<double(double)>& cdf) {
  const auto& x = emp.sorted();
  const std::size_t n = x.size();
  if (n < 10) throw DomainError("ks_distance: need at least 10 samples");
  double d = 0.0, prev_f = -1.0;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && x[j] == x[i]) ++j;
    // left limit matters when the model cdf itself jumps at x[i]
    const double f_left = cdf(std::nextafter(x[i], -INFINITY));
    const double f = cdf(x[i]);
    for (double v : {f_left, f}) {
      if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) throw DomainError("ks_distance: cdf value outside [0,1]");
      if (v < prev_f - 1e-12) throw DomainError("ks_distance: cdf is not monotone");
      prev_f = v;
    }
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(j) / n;
    d = std::max({d, std::fabs(f_left - below), std::fabs(above - f)});
    i = j;
  }
  return std::min(d, 1.0);
}

double ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  const auto& x = a.sorted();
  const auto& y = b.sorted();
  if (x.empty() || y.empty()) throw DomainError("ks_two_sample: empty sample");
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == t) ++i;
    while (j < y.size() && y[j] == t) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / x.size() - static_cast<double>(j) / y.size()));
  }
  return d;
}

MeanSe mean_se(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 2) throw DomainError("mean_se: need at least 2 samples");
  const double m = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return {m, std::sqrt(ss / (n - 1) / n), n};
}

std::vector<double> sample_cumulants(const std::vector<double>& x, int order) {
  if (order < 1 || order > 4) throw DomainError("sample_cumulants: order must lie in [1,4]");
  const double n = static_cast<double>(x.size());
  if (x.size() < 30) throw DomainError("sample_cumulants: need at least 30 samples");
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : x) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  std::vector<double> k{mean, n / (n - 1) * m2, n * n / ((n - 1) * (n - 2)) * m3,
                        n * n * ((n + 1) * m4 - 3 * (n - 1) * m2 * m2) / ((n - 1) * (n - 2) * (n - 3))};
  k.resize(static_cast<std::size_t>(order));
  return k;
}

SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys, const std::vector<double>& weights) {
  const std::size_t n = xs.size();
  if (n < 3 || ys.size() != n || (!weights.empty() && weights.size() != n)) {
    throw DomainError("fit_slope: need at least 3 points of matching length");
  }
  double sw = 0.0, sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    if (!(w >= 0.0)) throw DomainError("fit_slope: negative weight");
    sw += w;
    sx += w * xs[i];
    sy += w * ys[i];
  }
  const double xm = sx / sw, ym = sy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    sxx += w * (xs[i] - xm) * (xs[i] - xm);
    sxy += w * (xs[i] - xm) * (ys[i] - ym);
  }
  if (!(sxx > 0.0)) throw DomainError("fit_slope: degenerate design (all x equal)");
  SlopeFit f{};
  f.slope = sxy / sxx;
  f.intercept = ym - f.slope * xm;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = weights.empty() ? 1.0 : weights[i];
    const double r = ys[i] - f.intercept - f.slope * xs[i];
    rss += w * r * r;
  }
  // residual variance per unit weight
  const double s2 = rss / static_cast<double>(n - 2);
  f.slope_se = std::sqrt(s2 / sxx);
  f.intercept_se = std::sqrt(s2 * (1.0 / sw + xm * xm / sxx));
  return f;
}

double bootstrap_se(const std::vector<double>& x, const std::function<double(const std::vector<double>&)>& statistic,
                    int n_resamples, const Seed& seed) {
  if (x.size() < 30) throw DomainError("bootstrap_se: need at least 30 samples");
  if (n_resamples < 200) throw DomainError("bootstrap_se: need at least 200 resamples");
  Engine eng = make_engine(seed);
  std::uniform_int_distribution<std::size_t> pick(0, x.size() - 1);
  std::vector<double> buf(x.size()), stats;
  stats.reserve(static_cast<std::size_t>(n_resamples));
  for (int r = 0; r < n_resamples; ++r) {
    for (auto& b : buf) b = x[pick(eng)];
    stats.push_back(statistic(buf));
  }
  const double m = std::accumulate(stats.begin(), stats.end(), 0.0) / stats.size();
  double ss = 0.0;
  for (double s : stats) ss += (s - m) * (s - m);
  return std::sqrt(ss / (stats.size() - 1));
}

TailFit fit_power_tail(const std::vector<double>& samples, double lo, double hi, std::size_t n_bins,
                       std::size_t min_count) {
  if (!(lo > 0.0 && hi > lo)) throw DomainError("fit_power_tail: need 0 < lo < hi");
  if (n_bins < 3) throw DomainError("fit_power_tail: need at least 3 bins");
  const double a = std::log(lo), b = std::log(hi), w = (b - a) / static_cast<double>(n_bins);
  std::vector<std::size_t> counts(n_bins, 0);
  std::size_t n_tail = 0;
  for (double s : samples) {
    if (!(s >= lo && s < hi)) continue;
    std::size_t k = static_cast<std::size_t>((std::log(s) - a) / w);
    counts[std::min(k, n_bins - 1)]++;
    ++n_tail;
  }
  // merged bins as [edge_lo, edge_hi) with counts
  struct Bin {
    double e0, e1;
    std::size_t c;
  };
  std::vector<Bin> bins;
  Bin cur{a, a, 0};
  for (std::size_t k = 0; k < n_bins; ++k) {
    cur.e1 = a + (k + 1) * w;
    cur.c += counts[k];
    if (cur.c >= min_count) {
      bins.push_back(cur);
      cur = Bin{cur.e1, cur.e1, 0};
    }
  }
  if (cur.c > 0) {
    if (bins.empty()) {
      bins.push_back(cur);
    } else {
      bins.back().e1 = cur.e1;
      bins.back().c += cur.c;
    }
  }
  std::vector<double> xs, ys, ws;
  const double total = static_cast<double>(samples.size());
  for (const auto& bn : bins) {
    if (bn.c < min_count) continue;
    const double x0 = std::exp(bn.e0), x1 = std::exp(bn.e1);
    xs.push_back(0.5 * (bn.e0 + bn.e1));
    ys.push_back(std::log(static_cast<double>(bn.c) / (total * (x1 - x0))));
    ws.push_back(static_cast<double>(bn.c));
  }
  if (xs.size() < 3) throw DomainError("fit_power_tail: fewer than 3 populated bins");
  const auto f = fit_slope(xs, ys, ws);
  return {-f.slope, f.slope_se, xs.size(), n_tail};
}

GumbelFit fit_gumbel(const std::vector<double>& x) {
  if (x.size() < 10) throw DomainError("fit_gumbel: need at least 10 samples");
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / (n - 1));
  if (!(sd > 0.0)) throw DomainError("fit_gumbel: constant sample");
  // score equation for the scale: s = mean - sum x e^{-x/s} / sum e^{-x/s}
  auto score = [&](double s) {
    double num = 0.0, den = 0.0;
    for (double v : x) {
      const double e = std::exp(-(v - mean) / s);
      num += (v - mean) * e;
      den += e;
    }
    return s + num / den;
  };
  double lo = 0.05 * sd, hi = 5.0 * sd;
  if (score(lo) * score(hi) > 0.0) throw ConvergenceError("fit_gumbel: scale not bracketed");
  boost::math::tools::eps_tolerance<double> tol(50);
  const auto r = boost::math::tools::bisect(score, lo, hi, tol);
  const double s = 0.5 * (r.first + r.second);
  double den = 0.0;
  for (double v : x) den += std::exp(-(v - mean) / s);
  return {mean - s * std::log(den / n), s};
}

std::vector<double> normalize_variance(const std::vector<double>& x, double target) {
  if (!(target > 0.0)) throw DomainError("normalize_variance: target must be positive");
  const auto ms = mean_se(x);
  double ss = 0.0;
  for (double v : x) ss += (v - ms.mean) * (v - ms.mean);
  const double var = ss / static_cast<double>(x.size() - 1);
  if (!(var > 0.0)) throw DomainError("normalize_variance: zero sample variance");
  const double f = std::sqrt(target / var);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = ms.mean + (x[i] - ms.mean) * f;
  return y;
}

}  // namespace logfreeze::stats
