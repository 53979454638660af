#include "logfreeze/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "logfreeze/ensembles.hpp"
#include "logfreeze/error.hpp"
#include "logfreeze/parallel.hpp"
#include "logfreeze/stats.hpp"
#include "logfreeze/theory.hpp"

namespace logfreeze::experiments {

namespace {

constexpr double kEuler = boost::math::constants::euler<double>();
constexpr double kPi = boost::math::constants::pi<double>();
using ensembles::FieldGrid;
using ensembles::kTwoPi;

std::string param(const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "[%s=%g]", key, v);
  return buf;
}

std::string param2(const char* k1, double v1, const char* k2, double v2) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "[%s=%g,%s=%g]", k1, v1, k2, v2);
  return buf;
}

bool full_circle(double L) { return std::fabs(L - kTwoPi) < 1e-12; }

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// Runs `one` once per sample; row i of the result is sample i regardless of
// how tasks were scheduled.
std::vector<std::vector<double>> collect(const ExperimentConfig& c, std::size_t n_cols,
                                         const std::function<void(Engine&, double*)>& one) {
  const std::size_t nt = task_count(c.n_samples);
  std::vector<std::vector<double>> parts(nt);
  run_tasks(nt, c.n_workers, [&](std::size_t t) {
    const auto r = task_range(t, c.n_samples);
    Engine eng = make_engine({c.master_seed, t});
    auto& p = parts[t];
    p.assign((r.end - r.begin) * n_cols, 0.0);
    for (std::size_t i = r.begin; i < r.end; ++i) one(eng, p.data() + (i - r.begin) * n_cols);
  });
  std::vector<std::vector<double>> cols(n_cols, std::vector<double>(c.n_samples));
  std::size_t row = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.size() / n_cols; ++i, ++row) {
      for (std::size_t k = 0; k < n_cols; ++k) cols[k][row] = p[i * n_cols + k];
    }
  }
  return cols;
}

class FieldSource {
 public:
  explicit FieldSource(const ExperimentConfig& c) : c_(c) {
    if (c.ensemble == Ensemble::rem) rem_ = std::make_unique<ensembles::RemSampler>(c.N, c.W);
    if (c.ensemble == Ensemble::fourier) {
      fourier_ = std::make_unique<ensembles::FourierSampler>(c.N, c.n_grid ? c.n_grid : 4 * static_cast<std::size_t>(c.N));
    }
  }

  FieldGrid operator()(Engine& eng, double* r = nullptr) const {
    switch (c_.ensemble) {
      case Ensemble::cue:
        return ensembles::sample_cue_field(c_.N, eng, c_.L, c_.n_grid);
      case Ensemble::rem: {
        FieldGrid g;
        g.L = kTwoPi;
        g.n_grid = static_cast<std::size_t>(c_.N);
        g.offset = 0.0;
        g.values = rem_->sample(eng);
        return g;
      }
      case Ensemble::fourier:
        return fourier_->sample(eng, r);
    }
    throw ConfigError("unknown ensemble");
  }

  // number of "sites" per 2 pi that sets log N
  double n_scale() const { return static_cast<double>(c_.N); }
  double n_arc() const { return c_.ensemble == Ensemble::cue ? c_.N * c_.L / kTwoPi : static_cast<double>(c_.N); }

 private:
  const ExperimentConfig& c_;
  std::unique_ptr<ensembles::RemSampler> rem_;
  std::unique_ptr<ensembles::FourierSampler> fourier_;
};

Statistic make_stat(std::string name, const std::vector<double>& x, double theory, std::string ref) {
  const auto m = stats::mean_se(x);
  return {std::move(name), m.mean, m.se, m.n, theory, std::move(ref)};
}

void maybe_emit(RunSummary& s, std::vector<std::string> names, const std::vector<std::vector<double>>& cols) {
  if (!s.config.emit_samples) return;
  s.sample_columns = std::move(names);
  s.samples = cols;
}

Statistic tail_stat(std::string name, const std::vector<double>& x, double lo, double hi, double shift, double theory,
                    std::string ref) {
  Statistic s{std::move(name), NAN, NAN, 0, theory, std::move(ref)};
  try {
    const auto t = stats::fit_power_tail(x, lo, hi);
    s.estimate = t.exponent + shift;
    s.se = t.se;
    s.n = t.n_tail;
  } catch (const DomainError&) {
    // too few tail samples: left as NaN
  }
  return s;
}

double sample_variance(const std::vector<double>& x) { return stats::sample_cumulants(x, 2)[1]; }

}  // namespace

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::cue:
      return "cue";
    case Ensemble::rem:
      return "rem";
    case Ensemble::fourier:
      return "fourier";
  }
  return "?";
}

Ensemble ensemble_from_string(const std::string& s) {
  if (s == "cue") return Ensemble::cue;
  if (s == "rem") return Ensemble::rem;
  if (s == "fourier") return Ensemble::fourier;
  throw ConfigError("unknown ensemble '" + s + "' (expected cue, rem or fourier)");
}

void ExperimentConfig::validate() const {
  if (n_samples < 1) throw ConfigError("n_samples must be at least 1");
  if (N < 2 || N > 4096) throw ConfigError("N/M/K must lie in [2, 4096]");
  if (!(L > 0.0 && L <= kTwoPi + 1e-12)) throw ConfigError("L must lie in (0, 2 pi]");
  for (double b : beta_grid)
    if (!(b > 0.0)) throw ConfigError("beta_grid entries must be positive");
  for (double x : x_grid)
    if (!(x > 0.0 && x < 2.0)) throw ConfigError("x_grid entries must lie in (0, 2)");
  for (double q : q_grid)
    if (!(q > 0.0 && q < 4.0)) throw ConfigError("q_grid entries must lie in (0, 4)");
  if (n_workers < 1 || n_workers > 1024) throw ConfigError("workers must lie in [1, 1024]");
  if (!(W >= 0.0)) throw ConfigError("W must be nonnegative");
  if (ensemble == Ensemble::cue && n_grid != 0 && n_grid < 4 * static_cast<std::size_t>(N))
    throw ConfigError("n_grid must be at least 4 N");
  if (ensemble == Ensemble::fourier && n_grid != 0 && n_grid < 2 * static_cast<std::size_t>(N))
    throw ConfigError("n_grid must be at least 2 K");
}

const Statistic& RunSummary::stat(const std::string& name) const {
  for (const auto& s : stats)
    if (s.name == name) return s;
  throw ConfigError("no statistic named " + name);
}

double RunSummary::info_value(const std::string& name) const {
  for (const auto& kv : info)
    if (kv.first == name) return kv.second;
  throw ConfigError("no info entry named " + name);
}

double estimate_c(double mean_max, double N) {
  if (!(mean_max > 0.0)) throw DomainError("estimate_c: mean_max must be positive");
  if (!(N >= 8.0)) throw DomainError("estimate_c: requires N >= 8");
  const double ll = std::log(std::log(N));
  if (!(ll > 0.0)) throw DomainError("estimate_c: log log N must be positive");
  return 2.0 * (kEuler + std::log(N) - std::log(mean_max)) / ll;
}

std::vector<std::size_t> dyadic_ladder(int N, std::size_t n_grid) {
  std::vector<std::size_t> out;
  for (std::size_t b = 8; b <= static_cast<std::size_t>(N) / 8; b *= 2)
    if (n_grid % b == 0) out.push_back(b);
  return out;
}

RunSummary run_freezing(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble == Ensemble::fourier) throw ConfigError("freezing: ensemble must be cue or rem");
  Timer timer;
  const FieldSource src(c);
  const double nl = src.n_arc();
  const double lognl = std::log(nl);
  const std::size_t nb = c.beta_grid.size();
  auto cols = collect(c, nb, [&](Engine& eng, double* row) {
    const auto g = src(eng);
    for (std::size_t k = 0; k < nb; ++k) {
      const double b = c.beta_grid[k];
      row[k] = ensembles::partition_function(g, b, src.n_scale()) / (b * lognl);
    }
  });
  RunSummary s{"freezing", c, {}, {}, {}, {}, 0.0};
  std::vector<double> xs, ys, ws;
  for (std::size_t k = 0; k < nb; ++k) {
    const double b = c.beta_grid[k];
    s.stats.push_back(make_stat("neg_F" + param("beta", b), cols[k], theory::freezing_curve(b), "freezing curve"));
    if (b < 1.0) {
      const double corr = std::lgamma(1.0 - b * b) / (b * lognl);
      auto st = s.stats.back();
      st.name = "neg_F_corrected" + param("beta", b);
      st.estimate -= corr;
      s.stats.push_back(st);
    }
    if (b >= 1.5 && b <= 3.0) {
      xs.push_back(b);
      ys.push_back(s.stats[s.stats.size() - 1].estimate);
      const double se = s.stats.back().se;
      ws.push_back(se > 0.0 ? 1.0 / (se * se) : 1.0);
    }
  }
  if (xs.size() >= 3) {
    const auto f = stats::fit_slope(xs, ys, ws);
    s.stats.push_back({"plateau_slope[beta=1.5..3]", f.slope, f.slope_se, c.n_samples, 0.0, "frozen plateau"});
  }
  std::vector<std::string> names;
  for (double b : c.beta_grid) names.push_back("neg_F" + param("beta", b));
  maybe_emit(s, names, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_moments(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble != Ensemble::cue) throw ConfigError("moments: ensemble must be cue");
  Timer timer;
  const FieldSource src(c);
  const std::size_t nb = c.beta_grid.size();
  std::vector<double> log_ze(nb);
  for (std::size_t k = 0; k < nb; ++k) {
    if (!(c.beta_grid[k] < 1.0 / std::sqrt(2.0))) throw ConfigError("moments: need beta^2 < 1/2");
    log_ze[k] = theory::z_e_scale({c.beta_grid[k], 1.0, static_cast<double>(c.N), c.L});
  }
  auto cols = collect(c, nb, [&](Engine& eng, double* row) {
    const auto g = src(eng);
    for (std::size_t k = 0; k < nb; ++k)
      row[k] = std::exp(ensembles::partition_function(g, c.beta_grid[k], src.n_scale()) - log_ze[k]);
  });
  RunSummary s{"moments", c, {}, {}, {}, {}, 0.0};
  for (std::size_t k = 0; k < nb; ++k) {
    const double b = c.beta_grid[k];
    std::vector<double> z2(cols[k].size());
    for (std::size_t i = 0; i < z2.size(); ++i) z2[i] = cols[k][i] * cols[k][i];
    const bool full = full_circle(c.L);
    const double t1 = std::exp(theory::moment_full_circle({b, 1.0, double(c.N), c.L}) - log_ze[k]);
    double t2 = NAN;
    if (full) {
      t2 = std::exp(theory::moment_full_circle({b, 2.0, double(c.N), c.L}) - 2.0 * log_ze[k]);
    } else if (2.0 * b * b < 1.0) {
      t2 = std::exp(theory::moment_mesoscopic({b, 2.0, double(c.N), c.L}) - 2.0 * log_ze[k]);
    }
    s.stats.push_back(make_stat("Z_over_Ze" + param("beta", b), cols[k], t1, "Gamma(1 - beta^2)"));
    s.stats.push_back(make_stat("Z2_over_Ze2" + param("beta", b), z2, t2, "second moment"));
  }
  std::vector<std::string> names;
  for (double b : c.beta_grid) names.push_back("Z_over_Ze" + param("beta", b));
  maybe_emit(s, names, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_max_distribution(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble == Ensemble::fourier) throw ConfigError("max-dist: ensemble must be cue or rem");
  Timer timer;
  const FieldSource src(c);
  const double nl = src.n_arc();
  const double a = theory::extreme_shift(nl, 1.5);
  auto cols = collect(c, 4, [&](Engine& eng, double* row) {
    const auto ex = ensembles::field_extremes(src(eng));
    row[0] = ex.min_v - a;
    row[1] = ex.min_v;
    row[2] = ex.argmin;
    row[3] = std::exp(-0.5 * ex.min_v);
  });
  const auto& x = cols[0];
  const bool full = full_circle(c.L) || c.ensemble == Ensemble::rem;
  const double mean_t = full ? -2.0 * kEuler : theory::mesoscopic_cumulant(1);
  const double var_t = full ? kPi * kPi / 3.0 : theory::mesoscopic_cumulant(2);
  std::function<double(double)> cdf;
  if (full)
    cdf = [](double t) { return theory::cdf_max_full_circle(t); };
  else
    cdf = [](double t) { return std::clamp(1.0 - theory::mesoscopic_g(t), 0.0, 1.0); };

  RunSummary s{"max-dist", c, {}, {}, {}, {}, 0.0};
  s.stats.push_back(make_stat("x_mean", x, mean_t, full ? "maximum law, full circle" : "maximum law, mesoscopic arc"));
  std::vector<double> dev2(x.size());
  const double xm = s.stats.back().estimate;
  for (std::size_t i = 0; i < x.size(); ++i) dev2[i] = (x[i] - xm) * (x[i] - xm);
  s.stats.push_back(make_stat("x_variance", dev2, var_t, "maximum law cumulant 2"));
  s.stats.back().estimate *= x.size() / std::max<double>(1.0, x.size() - 1.0);

  const auto mm = stats::mean_se(cols[3]);
  s.stats.push_back({"mean_max_abs_p", mm.mean, mm.se, mm.n, std::exp(kEuler) * nl / std::pow(std::log(nl), 0.75),
                     "delta at c=3/2"});
  if (nl >= 8.0) {
    const double ch = estimate_c(mm.mean, nl);
    const double se = 2.0 * mm.se / (mm.mean * std::log(std::log(nl)));
    s.stats.push_back({"c_estimate", ch, se, mm.n, 1.5, "c = 3/2"});
  }

  if (x.size() >= 10) {
    const double var = sample_variance(x);
    const double bn = std::sqrt(var / var_t);
    std::vector<double> xp(x.size()), xr(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xp[i] = x[i] / bn;
    const double mp = std::accumulate(xp.begin(), xp.end(), 0.0) / xp.size();
    for (std::size_t i = 0; i < x.size(); ++i) xr[i] = xp[i] - mp + mean_t;
    s.info.push_back({"b_N", bn});
    s.info.push_back({"B", (1.0 - bn) * std::log(nl)});
    s.info.push_back({"ks_unscaled", stats::ks_distance(stats::EmpiricalDistribution(x), cdf)});
    s.info.push_back({"ks_scaled", stats::ks_distance(stats::EmpiricalDistribution(xp), cdf)});
    s.info.push_back({"ks_scaled_recentred", stats::ks_distance(stats::EmpiricalDistribution(xr), cdf)});

    // left tail: log(density / |x|) against x on [-8, -5] should have slope 1
    if (full) {
      const double w = 0.25;
      std::vector<double> bx, by, bw;
      for (double lo = -8.0; lo < -5.0 - 1e-9; lo += w) {
        const double cnt = static_cast<double>(std::count_if(xp.begin(), xp.end(), [&](double v) {
          return v >= lo && v < lo + w;
        }));
        if (cnt < 5) continue;
        const double mid = lo + 0.5 * w;
        bx.push_back(mid);
        by.push_back(std::log(cnt / (xp.size() * w * std::fabs(mid))));
        bw.push_back(cnt);
      }
      if (bx.size() >= 3) {
        const auto f = stats::fit_slope(bx, by, bw);
        s.stats.push_back({"left_tail_slope[x=-8..-5]", f.slope, f.slope_se, x.size(), 1.0, "|x| e^x backward tail"});
      }
    }
  }
  maybe_emit(s, {"x", "min_v", "argmin", "max_abs_p"}, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_sojourn(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble == Ensemble::fourier) throw ConfigError("sojourn: ensemble must be cue or rem");
  for (double x : c.x_grid)
    if (!(x < 1.0)) throw ConfigError("sojourn: x_grid must lie in (0, 1)");
  Timer timer;
  const FieldSource src(c);
  const std::size_t nx = c.x_grid.size();
  std::vector<double> scale(nx);
  const double L = c.ensemble == Ensemble::rem ? kTwoPi : c.L;
  for (std::size_t k = 0; k < nx; ++k) scale[k] = std::exp(theory::mu_typical(c.x_grid[k], src.n_scale(), L));
  auto cols = collect(c, nx, [&](Engine& eng, double* row) {
    const auto g = src(eng);
    for (std::size_t k = 0; k < nx; ++k) row[k] = ensembles::sojourn_measure(g, c.x_grid[k], src.n_scale()) / scale[k];
  });
  RunSummary s{"sojourn", c, {}, {}, {}, {}, 0.0};
  const bool full = full_circle(L);
  for (std::size_t k = 0; k < nx; ++k) {
    const double x = c.x_grid[k];
    const auto& xi = cols[k];
    s.stats.push_back(make_stat("xi_mean" + param("x", x), xi, std::tgamma(1.0 - x * x), "mean sojourn measure"));
    std::vector<double> mu(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) mu[i] = xi[i] * scale[k];
    s.stats.push_back(make_stat("mu_mean" + param("x", x), mu, scale[k] * std::tgamma(1.0 - x * x), "mu_e Gamma(1-x^2)"));
    const double zeros = static_cast<double>(std::count(xi.begin(), xi.end(), 0.0));
    s.info.push_back({"zero_fraction" + param("x", x), zeros / xi.size()});
    if (full && xi.size() >= 10) {
      const double b = 1.0 / (x * x);
      s.info.push_back({"ks" + param("x", x), stats::ks_distance(stats::EmpiricalDistribution(xi), [b](double t) {
                          return t > 0.0 ? std::exp(-std::pow(t, -b)) : 0.0;
                        })});
    }
    s.stats.push_back(tail_stat("tail_exponent" + param("x", x), xi, 3.0, 30.0, 0.0, 1.0 + 1.0 / (x * x),
                                "sojourn density tail"));
  }
  std::vector<std::string> names;
  for (double x : c.x_grid) names.push_back("xi" + param("x", x));
  maybe_emit(s, names, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_counting(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble != Ensemble::rem) throw ConfigError("counting: ensemble must be rem");
  Timer timer;
  const FieldSource src(c);
  const double M = c.N;
  const double lm = std::log(M);
  const std::size_t nx = c.x_grid.size();
  auto cols = collect(c, nx, [&](Engine& eng, double* row) {
    const auto g = src(eng);
    for (std::size_t k = 0; k < nx; ++k) {
      const double level = -c.x_grid[k] * lm;
      row[k] = static_cast<double>(std::count_if(g.values.begin(), g.values.end(), [&](double v) { return v < level; }));
    }
  });
  RunSummary s{"counting", c, {}, {}, {}, {}, 0.0};
  std::vector<double> fx, fy, fw;
  for (std::size_t k = 0; k < nx; ++k) {
    const double x = c.x_grid[k];
    const auto sc = theory::counting_typical(x, M);
    const double nt = std::exp(sc.log_typical);
    std::vector<double> n(cols[k].size());
    for (std::size_t i = 0; i < n.size(); ++i) n[i] = cols[k][i] / nt;
    s.stats.push_back(make_stat("n_mean" + param("x", x), n, std::tgamma(1.0 - 0.25 * x * x), "mean count / N_t"));
    const auto cm = stats::mean_se(cols[k]);
    s.stats.push_back({"count_mean" + param("x", x), cm.mean, cm.se, cm.n, std::exp(sc.log_mean), "E N_>"});
    // exponent with the explicit Gaussian prefactor removed
    if (cm.mean > 0.0) {
      const double f = (std::log(cm.mean) + std::log(x * std::sqrt(kPi * lm))) / lm;
      const double se = cm.se / (cm.mean * lm);
      s.stats.push_back({"exponent" + param("x", x), f, se, cm.n, 1.0 - 0.25 * x * x, "singularity spectrum 1 - x^2/4"});
      fx.push_back(1.0 - 0.25 * x * x);
      fy.push_back(f);
      fw.push_back(se > 0.0 ? 1.0 / (se * se) : 1.0);
    }
    const double empty = static_cast<double>(std::count(cols[k].begin(), cols[k].end(), 0.0));
    s.info.push_back({"empty_fraction" + param("x", x), empty / n.size()});
    // density exponent minus one is the survival exponent 4/x^2
    s.stats.push_back(tail_stat("n_tail_exponent" + param("x", x), n, 2.0, 30.0, -1.0, 4.0 / (x * x),
                                "count distribution tail"));
  }
  if (fx.size() >= 3) {
    const auto f = stats::fit_slope(fx, fy, fw);
    s.stats.push_back({"exponent_slope", f.slope, f.slope_se, c.n_samples, 1.0, "slope against 1 - x^2/4"});
  }
  std::vector<std::string> names;
  for (double x : c.x_grid) names.push_back("count" + param("x", x));
  maybe_emit(s, names, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_box_counting(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble != Ensemble::cue) throw ConfigError("box-counting: ensemble must be cue");
  Timer timer;
  const std::size_t ng = c.n_grid ? c.n_grid : ensembles::default_grid_size(c.N);
  const auto ladder = dyadic_ladder(c.N, ng);
  if (ladder.size() < 4) throw ConfigError("box-counting: fewer than 4 dyadic scales between 8 and N/8");
  const std::size_t nq = c.q_grid.size();
  const std::size_t per = nq + 1;
  auto cols = collect(c, ladder.size() * per, [&](Engine& eng, double* row) {
    const auto g = ensembles::sample_cue_field(c.N, eng, c.L, ng);
    for (std::size_t b = 0; b < ladder.size(); ++b) {
      const auto h = ensembles::box_means(g, ladder[b]);
      double z1 = 0.0;
      for (double v : h) z1 += v;
      row[b * per] = z1 / h.size();
      for (std::size_t k = 0; k < nq; ++k) {
        double zq = 0.0;
        for (double v : h) zq += std::pow(v, c.q_grid[k]);
        row[b * per + 1 + k] = zq / h.size();
      }
    }
  });
  RunSummary s{"box-counting", c, {}, {}, {}, {}, 0.0};
  const std::size_t n = c.n_samples;
  std::vector<double> xs;
  for (std::size_t nb : ladder) xs.push_back(std::log(nb / c.L));  // -log l_b
  auto tau = [&](std::size_t k, const std::vector<std::size_t>& idx) {
    std::vector<double> ys;
    for (std::size_t b = 0; b < ladder.size(); ++b) {
      double m1 = 0.0, mq = 0.0;
      for (std::size_t i : idx) {
        m1 += cols[b * per][i];
        mq += cols[b * per + 1 + k][i];
      }
      m1 /= idx.size();
      mq /= idx.size();
      ys.push_back(std::log(mq) - c.q_grid[k] * std::log(m1));
    }
    return stats::fit_slope(xs, ys).slope;
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<double> ids(n);
  std::iota(ids.begin(), ids.end(), 0.0);
  for (std::size_t k = 0; k < nq; ++k) {
    const double q = c.q_grid[k];
    const double est = tau(k, all);
    double se = NAN;
    if (n >= 30) {
      se = stats::bootstrap_se(
          ids,
          [&](const std::vector<double>& v) {
            std::vector<std::size_t> idx(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) idx[i] = static_cast<std::size_t>(v[i]);
            return tau(k, idx);
          },
          200, {c.master_seed, 0x626f78ULL + k});
    }
    s.stats.push_back({"tau" + param("q", q), est, se, n, 0.25 * q * (q - 1.0), "tau_q = q(q-1)/4"});
    for (std::size_t b = 0; b < ladder.size(); ++b) {
      double m1 = 0.0, mq = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        m1 += cols[b * per][i];
        mq += cols[b * per + 1 + k][i];
      }
      s.info.push_back({"log_i" + param2("q", q, "n_boxes", static_cast<double>(ladder[b])),
                        std::log(mq / n) - q * std::log(m1 / n)});
    }
  }
  std::vector<std::string> names;
  for (std::size_t nb : ladder) {
    names.push_back("zeta" + param2("q", 1.0, "n_boxes", static_cast<double>(nb)));
    for (double q : c.q_grid) names.push_back("zeta" + param2("q", q, "n_boxes", static_cast<double>(nb)));
  }
  maybe_emit(s, names, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_roughness(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble != Ensemble::fourier) throw ConfigError("roughness: ensemble must be fourier");
  if (c.N < 128) throw ConfigError("roughness: K must be at least 128");
  Timer timer;
  auto draw = [](const ExperimentConfig& cc) {
    const FieldSource src(cc);
    return collect(cc, 1, [&](Engine& eng, double* row) { src(eng, row); });
  };
  const auto cols = draw(c);
  const auto& r = cols[0];
  double h = 0.0;
  for (int k = 1; k <= c.N; ++k) h += 1.0 / k;
  RunSummary s{"roughness", c, {}, {}, {}, {}, 0.0};
  s.stats.push_back(make_stat("R_mean", r, 2.0 * h, "E V^2 = 2 H_K"));
  if (r.size() >= 30) {
    auto skew = [](const std::vector<double>& v) {
      const auto k = stats::sample_cumulants(v, 3);
      return k[2] / std::pow(k[1], 1.5);
    };
    const double sk_t = 12.0 * std::sqrt(6.0) * boost::math::zeta(3.0) / (kPi * kPi * kPi);
    const double se = stats::bootstrap_se(r, skew, 200, {c.master_seed, 0x736b6577ULL});
    s.stats.push_back({"skewness", skew(r), se, r.size(), sk_t, "Gumbel skewness"});
    const auto g = stats::fit_gumbel(r);
    const double sq = std::sqrt(static_cast<double>(r.size()));
    s.stats.push_back({"gumbel_location", g.location, 1.0529 * g.scale / sq, r.size(), 2.0 * h - 2.0 * kEuler,
                       "E V^2 + 2 Gamma'(1)"});
    s.stats.push_back({"gumbel_scale", g.scale, 0.7797 * g.scale / sq, r.size(), 2.0, "Gumbel scale"});
    s.info.push_back({"z_e_prime_0", 0.5 * g.location});
    s.info.push_back({"ks_gumbel", stats::ks_distance(stats::EmpiricalDistribution(r), [g](double t) {
                        return std::exp(-std::exp(-(t - g.location) / g.scale));
                      })});
    // shape stability: the same statistic at K/2, both centred by 2 H
    ExperimentConfig half = c;
    half.N = c.N / 2;
    half.n_grid = 0;
    half.master_seed = c.master_seed ^ 0x9e3779b97f4a7c15ULL;
    auto rh = draw(half)[0];
    double hh = 0.0;
    for (int k = 1; k <= half.N; ++k) hh += 1.0 / k;
    std::vector<double> a(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) a[i] = r[i] - 2.0 * h;
    for (double& v : rh) v -= 2.0 * hh;
    s.info.push_back({"ks_half_K", stats::ks_two_sample(stats::EmpiricalDistribution(a), stats::EmpiricalDistribution(rh))});
  }
  maybe_emit(s, {"R"}, cols);
  s.wall_seconds = timer.seconds();
  return s;
}

RunSummary run_rem_covariance(const ExperimentConfig& c) {
  c.validate();
  if (c.ensemble != Ensemble::rem) throw ConfigError("rem covariance: ensemble must be rem");
  Timer timer;
  const int M = c.N;
  const ensembles::RemSampler rem(M, c.W);
  const std::size_t nt = task_count(c.n_samples);
  std::vector<Eigen::MatrixXd> s1(nt), s2(nt);
  run_tasks(nt, c.n_workers, [&](std::size_t t) {
    const auto r = task_range(t, c.n_samples);
    Engine eng = make_engine({c.master_seed, t});
    const Eigen::MatrixXd X = rem.sample_batch(r.end - r.begin, eng);
    s1[t] = X * X.transpose();
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(M, M);
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      const Eigen::VectorXd x = X.col(j);
      q.noalias() += (x * x.transpose()).cwiseAbs2();
    }
    s2[t] = q;
  });
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(M, M), b = Eigen::MatrixXd::Zero(M, M);
  for (std::size_t t = 0; t < nt; ++t) {
    a += s1[t];
    b += s2[t];
  }
  const double n = static_cast<double>(c.n_samples);
  double max_z = 0.0, max_dev = 0.0;
  RunSummary s{"rem-covariance", c, {}, {}, {}, {}, 0.0};
  for (int k = 0; k < M; ++k) {
    for (int m = k; m < M; ++m) {
      const double mean = a(k, m) / n;
      const double var = std::max(0.0, b(k, m) / n - mean * mean) * n / std::max(1.0, n - 1.0);
      const double se = std::sqrt(var / n);
      const double exact = ensembles::RemSampler::covariance(M, c.W, k, m);
      max_dev = std::max(max_dev, std::fabs(mean - exact));
      if (se > 0.0) max_z = std::max(max_z, std::fabs(mean - exact) / se);
      if (k == 0 && (m == 0 || m == 1 || m == M / 2)) {
        s.stats.push_back({"C" + param2("k", 0, "m", m), mean, se, c.n_samples, exact, "log-sine covariance"});
      }
    }
  }
  s.info.push_back({"max_abs_z", max_z});
  s.info.push_back({"max_abs_dev", max_dev});
  s.info.push_back({"minimal_W", ensembles::RemSampler::minimal_w(M)});
  s.wall_seconds = timer.seconds();
  return s;
}

}  // namespace logfreeze::experiments
