#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <boost/math/constants/constants.hpp>

#include "logfreeze/error.hpp"
#include "logfreeze/experiments.hpp"
#include "logfreeze/parallel.hpp"
#include "logfreeze/stats.hpp"
#include "logfreeze/theory.hpp"
#include "logfreeze/zeta.hpp"

namespace logfreeze::experiments {

namespace {

constexpr double kEuler = boost::math::constants::euler<double>();
constexpr double kPi = boost::math::constants::pi<double>();
constexpr double kTwoPi = 2.0 * kPi;
constexpr std::size_t kWindowsPerTask = 16;

std::string param(const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%s=%g]", key, v);
  return buf;
}

void validate_zeta(const ExperimentConfig& c, double L) {
  if (c.n_workers < 1 || c.n_workers > 1024) throw ConfigError("workers must lie in [1, 1024]");
  if (c.windows < 1) throw ConfigError("windows must be at least 1");
  if (!(L > 0.0 && L <= kTwoPi + 1e-12)) throw ConfigError("L must lie in (0, 2 pi]");
  if (!(c.T >= 10.0 && c.T + static_cast<double>(c.windows) * L <= 1e9))
    throw ConfigError("zeta windows must lie in [10, 1e9]");
  if (c.points_per_unit < 0) throw ConfigError("points_per_unit must be nonnegative");
}

// row w = f(window start), independent of worker count
std::vector<std::vector<double>> per_window(const ExperimentConfig& c, double L, std::size_t n_cols,
                                            const std::function<void(double, double*)>& f) {
  std::vector<std::vector<double>> cols(n_cols, std::vector<double>(c.windows));
  const std::size_t nt = (c.windows + kWindowsPerTask - 1) / kWindowsPerTask;
  run_tasks(nt, c.n_workers, [&](std::size_t t) {
    std::vector<double> row(n_cols);
    const std::size_t end = std::min(c.windows, (t + 1) * kWindowsPerTask);
    for (std::size_t w = t * kWindowsPerTask; w < end; ++w) {
      f(c.T + static_cast<double>(w) * L, row.data());
      for (std::size_t k = 0; k < n_cols; ++k) cols[k][w] = row[k];
    }
  });
  return cols;
}

Statistic make_stat(std::string name, const std::vector<double>& x, double theory, std::string ref) {
  const auto m = stats::mean_se(x);
  return {std::move(name), m.mean, m.se, m.n, theory, std::move(ref)};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

RunSummary run_zeta_max(const ExperimentConfig& c) {
  validate_zeta(c, c.L);
  const auto t0 = std::chrono::steady_clock::now();
  auto cols = per_window(c, c.L, 5, [&](double T, double* row) {
    const auto w = zeta::scan_window_max(T, c.L, c.points_per_unit);
    row[0] = w.T;
    row[1] = w.L;
    row[2] = w.zeta_max;
    row[3] = w.argmax_t;
    row[4] = w.sigma;
  });
  RunSummary s{"zeta-max", c, {}, {}, {}, {}, 0.0};
  const auto mm = stats::mean_se(cols[2]);
  s.stats.push_back({"mean_max", mm.mean, mm.se, mm.n, NAN, ""});
  // model mean e^gamma N / (log N)^{c/2} with N the integer nearest log T
  const double N = std::round(std::log(c.T));
  s.info.push_back({"N", N});
  for (double cc : {1.5, 0.5}) {
    const double delta = std::exp(kEuler) * N / std::pow(std::log(N), 0.5 * cc);
    s.stats.push_back({"ratio" + param("c", cc), mm.mean / delta, mm.se / delta, mm.n, NAN, "data mean over model mean"});
  }
  if (N >= 8.0) {
    const double ch = estimate_c(mm.mean, N);
    s.stats.push_back({"c_estimate", ch, 2.0 * mm.se / (mm.mean * std::log(std::log(N))), mm.n, 1.5, "c = 3/2"});
  }
  std::vector<double> sig;
  for (double v : cols[4])
    if (std::isfinite(v)) sig.push_back(v);
  if (sig.size() >= 10) {
    s.stats.push_back(make_stat("sigma_mean", sig, -2.0 * kEuler, "maximum law, full circle"));
    const auto xs = stats::normalize_variance(sig, kPi * kPi / 3.0);
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    std::vector<double> xr(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xr[i] = xs[i] - mx - 2.0 * kEuler;
    const auto cdf = [](double t) { return theory::cdf_max_full_circle(t); };
    s.info.push_back({"sigma_variance", stats::sample_cumulants(sig, 2)[1]});
    s.info.push_back({"ks_sigma_normalized", stats::ks_distance(stats::EmpiricalDistribution(xs), cdf)});
    s.info.push_back({"ks_sigma_recentred", stats::ks_distance(stats::EmpiricalDistribution(xr), cdf)});
  }
  s.sample_columns = {"T", "L", "zeta_max", "argmax_t", "sigma"};
  s.samples = std::move(cols);
  s.wall_seconds = seconds_since(t0);
  return s;
}

RunSummary run_zeta_freezing(const ExperimentConfig& c) {
  validate_zeta(c, kTwoPi);
  for (double b : c.beta_grid)
    if (!(b > 0.0)) throw ConfigError("beta_grid entries must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t nb = c.beta_grid.size();
  auto cols = per_window(c, kTwoPi, nb, [&](double T, double* row) {
    const auto lz = zeta::zeta_partition(T, c.beta_grid, c.points_per_unit);
    for (std::size_t k = 0; k < nb; ++k) row[k] = zeta::d_statistic(T, c.beta_grid[k], lz[k]);
  });
  RunSummary s{"zeta-freezing", c, {}, {}, {}, {}, 0.0};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nb; ++k) {
    const double b = c.beta_grid[k];
    names.push_back("D" + param("beta", b));
    s.stats.push_back(make_stat(names.back(), cols[k], theory::freezing_curve(b), "freezing curve"));
  }
  if (c.emit_samples) {
    s.sample_columns = names;
    s.samples = std::move(cols);
  }
  s.wall_seconds = seconds_since(t0);
  return s;
}

RunSummary run_zeta_measure(const ExperimentConfig& c) {
  validate_zeta(c, c.L);
  for (double x : c.x_grid)
    if (!(x > 0.0 && x < 1.0)) throw ConfigError("zeta-measure: x_grid entries must lie in (0, 1)");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t nx = c.x_grid.size();
  auto cols = per_window(c, c.L, 2 * nx, [&](double T, double* row) {
    for (std::size_t k = 0; k < nx; ++k) {
      const double x = c.x_grid[k];
      row[2 * k] = zeta::zeta_high_measure(T, c.L, x, c.points_per_unit);
      row[2 * k + 1] = row[2 * k] / zeta::zeta_measure_scale(T, x);
    }
  });
  RunSummary s{"zeta-measure", c, {}, {}, {}, {}, 0.0};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nx; ++k) {
    const double x = c.x_grid[k];
    names.push_back("mu" + param("x", x));
    names.push_back("mu_ratio" + param("x", x));
    s.stats.push_back(make_stat(names[2 * k], cols[2 * k], NAN, ""));
    s.stats.push_back(make_stat(names[2 * k + 1], cols[2 * k + 1], std::tgamma(1.0 - x * x), "Gamma(1 - x^2)"));
  }
  if (c.emit_samples) {
    s.sample_columns = names;
    s.samples = std::move(cols);
  }
  s.wall_seconds = seconds_since(t0);
  return s;
}

RunSummary run_diag_corr(const ExperimentConfig& c) {
  if (c.prime_limit < 1000 || c.prime_limit > 100000000) throw ConfigError("prime_limit must lie in [1e3, 1e8]");
  if (!(c.T > std::exp(1.0))) throw ConfigError("T must exceed e");
  const auto t0 = std::chrono::steady_clock::now();
  RunSummary s{"diag-corr", c, {}, {}, {}, {}, 0.0};
  for (double x : c.x_grid) {
    if (!(x > 0.0 && x < 1.0)) throw ConfigError("diag-corr: x_grid entries must lie in (0, 1)");
    const auto d = zeta::diag_correlation(x, c.prime_limit);
    const std::string p = param("x", x);
    s.info.push_back({"first_sum" + p, d.first_sum});
    s.info.push_back({"second_sum" + p, d.second_sum});
    s.info.push_back({"second_bound" + p, d.second_bound});
    s.info.push_back({"truncated" + p, d.truncated});
    s.info.push_back({"closed_form" + p, d.closed_form});
    s.info.push_back({"leading" + p, d.leading});
    s.info.push_back({"gap" + p, d.closed_form - d.leading});
    s.info.push_back({"converged" + p, d.converged ? 1.0 : 0.0});
  }
  const auto pl = zeta::diag_plateau(c.T);
  s.info.push_back({"plateau_half_loglog", pl.half_loglog});
  s.info.push_back({"plateau_two_loglog", pl.two_loglog});
  s.wall_seconds = seconds_since(t0);
  return s;
}

}  // namespace logfreeze::experiments
