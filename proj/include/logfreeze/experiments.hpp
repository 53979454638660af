#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace logfreeze::experiments {

enum class Ensemble { cue, rem, fourier };
std::string to_string(Ensemble e);
Ensemble ensemble_from_string(const std::string& s);

struct ExperimentConfig {
  Ensemble ensemble = Ensemble::cue;
  int N = 50;  // N (cue), M (rem) or K (fourier)
  double L = 6.28318530717958647692;
  std::vector<double> beta_grid{0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 2.5, 3.0};
  std::vector<double> x_grid{0.5};
  std::vector<double> q_grid{2.0, 3.0};
  std::size_t n_samples = 10000;
  std::size_t n_grid = 0;  // 0: 16 N for cue, 4 K for fourier; rem uses M
  std::uint64_t master_seed = 1;
  int n_workers = 1;
  double W = 1e-6;
  bool emit_samples = false;
  // zeta runs
  double T = 1e6;
  std::size_t windows = 1000;
  int points_per_unit = 0;  // 0: 16 per mean zero spacing
  std::uint64_t prime_limit = 100000;

  void validate() const;
};

struct Statistic {
  std::string name;
  double estimate = NAN;
  double se = NAN;
  std::size_t n = 0;
  double theory = NAN;
  std::string theory_ref;
};

struct RunSummary {
  std::string experiment;
  ExperimentConfig config;
  std::vector<Statistic> stats;
  // diagnostics without a sampling error (KS distances, fitted constants)
  std::vector<std::pair<std::string, double>> info;
  std::vector<std::string> sample_columns;
  std::vector<std::vector<double>> samples;  // one vector per column
  double wall_seconds = 0.0;

  const Statistic& stat(const std::string& name) const;
  double info_value(const std::string& name) const;
};

RunSummary run_freezing(const ExperimentConfig& c);
// E{Z}/Z_e and E{Z^2}/Z_e^2 per beta (cue)
RunSummary run_moments(const ExperimentConfig& c);
RunSummary run_max_distribution(const ExperimentConfig& c);
RunSummary run_sojourn(const ExperimentConfig& c);
RunSummary run_counting(const ExperimentConfig& c);
RunSummary run_box_counting(const ExperimentConfig& c);
RunSummary run_roughness(const ExperimentConfig& c);
// empirical M x M covariance of the lattice model against the exact one
RunSummary run_rem_covariance(const ExperimentConfig& c);

// consecutive windows [T + jL, T + (j+1)L]
RunSummary run_zeta_max(const ExperimentConfig& c);
// D_T(beta) over consecutive 2 pi windows
RunSummary run_zeta_freezing(const ExperimentConfig& c);
// high-value measure over its leading-order scale, per x
RunSummary run_zeta_measure(const ExperimentConfig& c);
RunSummary run_diag_corr(const ExperimentConfig& c);

// c solving e^{gamma_E} N / (log N)^{c/2} = mean_max
double estimate_c(double mean_max, double N);

// powers of two with 8 <= n_boxes <= N / 8 dividing n_grid
std::vector<std::size_t> dyadic_ladder(int N, std::size_t n_grid);

}  // namespace logfreeze::experiments
