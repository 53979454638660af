#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace logfreeze::zeta {

struct CriticalPoint {
  double t;
  double z_value;   // Hardy Z(t)
  double zeta_abs;  // |zeta(1/2 + it)|
};

struct WindowRecord {
  double T;
  double L;
  double zeta_max;
  double argmax_t;
  double sigma;  // -2 log zeta_max + 2 log log(T/2pi) - (3/2) log log log(T/2pi)
};

// Asymptotic theta(t), t >= 10.
double riemann_siegel_theta(double t);
// Riemann-Siegel with corrections C0..C4 for t >= 1000, Euler-Maclaurin below.
double hardy_z(double t);
CriticalPoint zeta_half_line(double t);
// Riemann-Siegel path alone, 100 <= t <= 1e9.
double riemann_siegel_z(double t);
// Re s > 0, s != 1, |Im s| <= 1e5.
std::complex<double> euler_maclaurin_zeta(std::complex<double> s);

// 16 points per mean zero spacing: ceil(16 log(T/2pi) / 2pi) per unit length.
int default_points_per_unit(double T);

// Nodes at T + (j + grid_offset) h plus both endpoints, grid_offset in [0, 1).
WindowRecord scan_window_max(double T, double L, int points_per_unit = 0, double grid_offset = 0.0);
// log of (1/2pi) log(T/2pi) int_T^{T+2pi} |zeta|^{2 beta} dt
double zeta_partition(double T, double beta, int points_per_unit = 0);
// Same integral for several beta from one scan.
std::vector<double> zeta_partition(double T, const std::vector<double>& betas, int points_per_unit = 0);
// beta + 1/beta + log(Z_T / (x P_beta(x))) / (beta log x), x = log(T/2pi),
// P_beta(x) = a(beta) G(1+beta)^2 / G(1+2beta) x^{beta^2}
double d_statistic(double T, double beta, double log_ZT);
// grid fraction of [T, T+L] with |zeta| >= ((L/2pi) log(T/2pi))^x
double zeta_high_measure(double T, double L, double x, int points_per_unit = 0);
// a(x) (log T/2pi)^{-x^2} G(1+x)^2 / (2x G(1+2x) Gamma(1-x^2)) / sqrt(pi log log T/2pi)
double zeta_measure_scale(double T, double x);

int count_sign_changes(double T, double L, int points_per_unit = 0);
// bisection on a sign change of Z in [a, b]
double find_zero(double a, double b, double tol = 1e-10);

// prod_{p <= limit} (1 - p^{-s})^{-1}
double euler_product(double s, std::uint64_t prime_limit);

struct DiagCorrelation {
  double first_sum;   // (1/2) sum_p sum_n cos(n x log p) / (n p^n), p <= limit
  double second_sum;  // (1/2) sum_p sum_{n>=2} (1-n) cos(n x log p) / (n^2 p^n)
  double second_bound;  // (1/2) sum_p 1/(p(p-1)) over the same primes
  double truncated;     // first_sum + second_sum
  double closed_form;   // (1/2) Re log zeta(1 + ix)
  double leading;       // -(1/2) log x
  bool converged;       // tail of the second sum beyond the limit below 1e-3
};
DiagCorrelation diag_correlation(double x, std::uint64_t prime_limit);

// Diagonal plateau of <V^2> as derived ((1/2) log log t) and as stated with the
// factor 4 from V = -2 log|zeta| (2 log log t).
struct DiagPlateau {
  double half_loglog;
  double two_loglog;
};
DiagPlateau diag_plateau(double t);

}  // namespace logfreeze::zeta
