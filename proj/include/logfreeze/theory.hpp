#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "logfreeze/contour.hpp"

namespace logfreeze::theory {

inline constexpr double kTwoPi = 6.28318530717958647692;

struct MomentSpec {
  double beta = 0.5;
  double k = 1.0;
  double N = 64.0;
  double L = kTwoPi;
};

// log Z_e (L = 2 pi) or log of the mesoscopic scale with N_L = N L / 2 pi.
double z_e_scale(const MomentSpec& spec);
// log E{Z^k} = k log Z_e + log Gamma(1 - k beta^2); requires k beta^2 < 1.
double moment_full_circle(const MomentSpec& spec);
// log E{Z~^k} on a mesoscopic arc, integer k < 1/beta^2.
double moment_mesoscopic(const MomentSpec& spec);

// Density of z = Z/Z_e; CDF exp(-z^{-1/beta^2}).
double density_scaled_moment(double z, double beta);
// Far tail density in Z (log argument), valid for log Z > 2 log M.
double lognormal_tail(double logZ, double beta, double M);
double log_lognormal_tail(double logZ, double beta, double M);

// g_beta(y) = int_0^inf exp(-t - e^{beta y} t^{-beta^2}) dt, 0 < beta <= 1.
double g_beta(double y, double beta);
// The same function from its dual series (symmetric under beta -> 1/beta).
double g_beta_series(double y, double beta);

// log int_0^inf exp(-t - q t^{-b}) dt for q >= 0, b > 0.
double log_stretched_laplace(double q, double b);

// Maximum of the full-circle field: density 2 e^x K0(2 e^{x/2}),
// survival 2 e^{x/2} K1(2 e^{x/2}).
double pdf_max_full_circle(double x);
double survival_max_full_circle(double x);
double cdf_max_full_circle(double x);
// 1 + e^x (x - 1 + 2 gamma_E) + e^{2x} (x/2 - 5/4 + gamma_E), for x < -3.
double cdf_asymptotics_full_circle(double x);
// n-th cumulant of the full-circle maximum variable.
double cumulant_max_full_circle(int n);

// Frozen-phase free-energy density (beta > 1).
double clm_density(double phi, double beta);
double clm_density_fourier(double phi, double beta);
double clm_density_series(double phi, double beta);

// Mesoscopic arc: complement of the CDF, its density, and log M(s).
std::complex<double> log_mellin_mesoscopic(std::complex<double> s);
double mesoscopic_g(double y);
double mesoscopic_density(double y);
// n-th cumulant of the mesoscopic variable, n >= 1.
double mesoscopic_cumulant(int n);

// Typical sojourn scale mu_e(x) (L = 2 pi) or mu~_e(x) (L < 2 pi), log scale.
// N may be non-integer (the zeta analogue uses N = log(T/2pi)).
double mu_typical(double x, double N, double L = kTwoPi);
double density_sojourn_full_circle(double xi, double x);
std::complex<double> log_mellin_sojourn(std::complex<double> s, double x);
std::complex<double> mellin_sojourn(std::complex<double> s, double x);

// P(xi) on a mesoscopic arc by contour inversion; construction samples the
// Mellin transform once, evaluation is cheap.
class SojournMesoscopic {
 public:
  explicit SojournMesoscopic(double x);
  double operator()(double xi) const;
  double x() const { return x_; }

 private:
  double x_;
  std::shared_ptr<VerticalLine> right_;  // xi >= 1
  std::shared_ptr<VerticalLine> left_;   // xi < 1
};
double density_sojourn_mesoscopic(double xi, double x);

struct CountingScale {
  double log_typical;  // log N_t(x)
  double log_mean;     // log E{N_>(x)} = log N_t + log Gamma(1 - x^2/4)
};
CountingScale counting_typical(double x, double M);
double threshold_extreme(double M, double c = 1.5);
// a_N = -2 log N + c log log N
double extreme_shift(double N, double c = 1.5);

double freezing_curve(double beta);

double pathintegral_rhs(double p, double beta, double variance);
double log_pathintegral_rhs(double p, double beta, double variance);

struct ArithmeticFactor {
  double value;          // truncated product times the tail correction
  double truncated;      // product over p <= prime_limit
  double log_tail;       // second-order estimate of log of the remaining factors
  bool converged;        // |log_tail| below tolerance
  std::uint64_t prime_limit;
};
ArithmeticFactor arithmetic_factor(double x, std::uint64_t prime_limit = 100000, double tolerance = 1e-6);

}  // namespace logfreeze::theory
