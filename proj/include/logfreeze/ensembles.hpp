#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "logfreeze/rng.hpp"

namespace logfreeze::ensembles {

inline constexpr double kTwoPi = 6.28318530717958647692;
// V is clamped here when a node lands on (or within 1e-300 of) a zero of p.
inline constexpr double kVClamp = 1400.0;

// Samples V(theta_j), theta_j = offset + j L / n_grid.
struct FieldGrid {
  double L = kTwoPi;
  std::size_t n_grid = 0;
  double offset = 0.0;
  std::vector<double> values;

  double theta(double j) const { return offset + j * L / static_cast<double>(n_grid); }
  double step() const { return L / static_cast<double>(n_grid); }
  bool full_circle() const { return std::fabs(L - kTwoPi) < 1e-12; }
};

// Haar unitary: QR of a complex Ginibre matrix with the phases of diag(R)
// folded back into Q.
Eigen::MatrixXcd sample_haar_unitary(int N, Engine& eng);
// Eigenphases in [0, 2 pi), ascending.
std::vector<double> unitary_eigenphases(const Eigen::MatrixXcd& U);
std::vector<double> sample_cue_phases(int N, Engine& eng);
std::vector<double> sample_cue_phases(int N, const Seed& seed);

std::size_t default_grid_size(int N);
// V_j = -2 sum_n log|2 sin((theta_j - phi_n)/2)|. n_grid = 0 selects 16 N,
// a NaN offset selects half a grid step.
FieldGrid log_charpoly_grid(const std::vector<double>& phases, double L = kTwoPi, std::size_t n_grid = 0,
                            double offset = NAN);

// CUE field without eigenphases: Killip-Nenciu Verblunsky coefficients
// (|a_k|^2 ~ Beta(1, N-k-1), a_{N-1} on the circle) and |p_N| = |Phi_N| by
// the Szego recursion. Same law as log_charpoly_grid(sample_cue_phases(...)).
std::vector<std::complex<double>> sample_verblunsky(int N, Engine& eng);
FieldGrid verblunsky_grid(const std::vector<std::complex<double>>& alpha, double L = kTwoPi, std::size_t n_grid = 0,
                          double offset = NAN);
FieldGrid sample_cue_field(int N, Engine& eng, double L = kTwoPi, std::size_t n_grid = 0, double offset = NAN);

// Circular-logarithmic lattice model:
//   C_km = -2 log|2 sin(pi (k - m)/M)| (k != m),  C_kk = 2 log M + W.
class RemSampler {
 public:
  RemSampler(int M, double W);
  int M() const { return M_; }
  double W() const { return W_; }
  static double covariance(int M, double W, int k, int m);
  // Smallest W for which the covariance stays positive semidefinite.
  static double minimal_w(int M);
  std::vector<double> sample(Engine& eng) const;
  // count samples as columns
  Eigen::MatrixXd sample_batch(std::size_t count, Engine& eng) const;

 private:
  int M_;
  double W_;
  Eigen::MatrixXd chol_;
};
std::vector<double> sample_circular_rem(int M, double W, const Seed& seed);

// Truncated 1/f series V(t) = sum_{n<=K} (2/sqrt n) Re(v_n e^{int}), E|v_n|^2 = 1,
// on t_j = 2 pi j / n_grid; pointwise variance 2 H_K.
class FourierSampler {
 public:
  FourierSampler(int K, std::size_t n_grid);
  ~FourierSampler();
  FourierSampler(const FourierSampler&) = delete;
  FourierSampler& operator=(const FourierSampler&) = delete;
  int K() const { return K_; }
  std::size_t n_grid() const { return n_grid_; }
  FieldGrid sample(Engine& eng) const;
  // The same draw also returns R = sum 2|v_n|^2/n when r is non-null.
  FieldGrid sample(Engine& eng, double* r) const;

 private:
  struct Plan;
  int K_;
  std::size_t n_grid_;
  std::unique_ptr<Plan> plan_;
};
FieldGrid sample_fourier_field(int K, std::size_t n_grid, const Seed& seed);

// log[(N_scale/2 pi)(L/n_grid) sum_j e^{-beta V_j}]
double partition_function(const FieldGrid& field, double beta, double N_scale);

struct Extremes {
  double min_v;
  double argmin;
  double max_v;
};
Extremes field_extremes(const FieldGrid& field);

// Grid fraction where -V/2 > x log N_L, N_L = N_scale L / 2 pi.
double sojourn_measure(const FieldGrid& field, double x, double N_scale);

// Box averages h_b of |p| = e^{-V/2}; n_boxes must divide n_grid.
std::vector<double> box_means(const FieldGrid& field, std::size_t n_boxes);
// zeta_q = (1/n_boxes) sum_b h_b^q
double box_coarsen(const FieldGrid& field, std::size_t n_boxes, double q);

}  // namespace logfreeze::ensembles
