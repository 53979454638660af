#include "logfreeze/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "logfreeze/error.hpp"
#include "logfreeze/specfun.hpp"

namespace logfreeze::theory {

using specfun::cplx;
using specfun::kEulerGamma;
using specfun::kLog2Pi;
using specfun::kPi;
using specfun::log_barnes_g;
using specfun::log_gamma;

namespace {

bool is_full_circle(double L) { return std::fabs(L - kTwoPi) < 1e-12; }

void check_spec(const MomentSpec& s) {
  if (!(s.beta > 0.0)) throw DomainError("beta must be positive");
  if (!(s.L > 0.0 && s.L <= kTwoPi + 1e-12)) throw DomainError("L must lie in (0, 2pi]");
  if (!(s.N >= 1.0)) throw DomainError("N must be at least 1");
}

// log|Gamma(x)| and its sign, for real x away from the poles.

}  // namespace

double z_e_scale(const MomentSpec& spec) {
  check_spec(spec);
  const double b = spec.beta;
  if (b >= 1.0) throw PoleError("z_e_scale: Gamma(1 - beta^2) has a pole for beta >= 1");
  const double g = 2.0 * log_barnes_g(1.0 + b) - log_barnes_g(1.0 + 2.0 * b) - log_gamma(1.0 - b * b);
  if (is_full_circle(spec.L)) return (1.0 + b * b) * std::log(spec.N) + g;
  const double NL = spec.N * spec.L / kTwoPi;
  return (1.0 + b * b) * std::log(NL) + b * b * kLog2Pi + g;
}

double moment_full_circle(const MomentSpec& spec) {
  check_spec(spec);
  const double kb2 = spec.k * spec.beta * spec.beta;
  if (kb2 >= 1.0) throw DomainError("moment_full_circle: moment diverges for k beta^2 >= 1");
  if (!(spec.k > 0.0)) throw DomainError("moment_full_circle: k must be positive");
  return spec.k * z_e_scale(spec) + log_gamma(1.0 - kb2);
}

double moment_mesoscopic(const MomentSpec& spec) {
  check_spec(spec);
  const double b2 = spec.beta * spec.beta;
  const int k = static_cast<int>(std::lround(spec.k));
  if (std::fabs(spec.k - k) > 1e-12 || k < 1) throw DomainError("moment_mesoscopic: k must be a positive integer");
  if (k * b2 >= 1.0) throw DomainError("moment_mesoscopic: moment diverges for k beta^2 >= 1");
  MomentSpec meso = spec;
  if (is_full_circle(meso.L)) throw DomainError("moment_mesoscopic: L must be below 2pi");
  double acc = k * z_e_scale(meso);
  for (int j = 1; j <= k; ++j) {
    acc += 2.0 * log_gamma(1.0 - (j - 1) * b2) + log_gamma(1.0 - j * b2) - log_gamma(2.0 - (k + j - 2) * b2);
  }
  return acc;
}

double density_scaled_moment(double z, double beta) {
  if (!(z > 0.0)) throw DomainError("density_scaled_moment: z must be positive");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("density_scaled_moment: beta must lie in (0,1)");
  const double ib2 = 1.0 / (beta * beta);
  const double lz = std::log(z);
  return std::exp(std::log(ib2) - (1.0 + ib2) * lz - std::exp(-ib2 * lz));
}

double log_lognormal_tail(double logZ, double beta, double M) {
  const double lm = std::log(M);
  if (!(M > 1.0)) throw DomainError("lognormal_tail: M must exceed 1");
  if (!(logZ > 2.0 * lm)) throw DomainError("lognormal_tail: requires log Z > 2 log M");
  const double b2 = beta * beta;
  return lm - 0.5 * std::log(4.0 * kPi * b2 * lm) - logZ - logZ * logZ / (4.0 * b2 * lm);
}

double lognormal_tail(double logZ, double beta, double M) { return std::exp(log_lognormal_tail(logZ, beta, M)); }

double log_stretched_laplace(double q, double b) {
  if (q < 0.0 || !(b > 0.0)) throw DomainError("log_stretched_laplace: needs q >= 0, b > 0");
  if (q == 0.0) return 0.0;
  // t = e^u: integrand exp(phi(u)), phi = u - e^u - q e^{-b u}; trapezoid in u
  auto phi = [&](double u) { return u - std::exp(u) - q * std::exp(-b * u); };
  auto dphi = [&](double u) { return 1.0 - std::exp(u) + q * b * std::exp(-b * u); };
  double lo = 0.0, hi = std::log1p(q * b);
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (dphi(mid) > 0.0 ? lo : hi) = mid;
  }
  const double um = 0.5 * (lo + hi);
  const double pm = phi(um);
  constexpr double h = 0.02;
  constexpr double kDrop = 50.0;
  double sum = 1.0;
  for (int k = 1;; ++k) {
    const double d = phi(um + k * h) - pm;
    if (d < -kDrop) break;
    sum += std::exp(d);
  }
  for (int k = 1;; ++k) {
    const double d = phi(um - k * h) - pm;
    if (d < -kDrop) break;
    sum += std::exp(d);
  }
  return pm + std::log(h * sum);
}

double g_beta(double y, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) throw DomainError("g_beta: beta must lie in (0,1]");
  return std::exp(log_stretched_laplace(std::exp(beta * y), beta * beta));
}

double g_beta_series(double y, double beta) {
  if (!(beta > 0.0)) throw DomainError("g_beta_series: beta must be positive");
  using ld = long double;
  // long double throughout: at y ~ 4 the terms reach 1e7 while the sum is ~1e-6
  const ld bl = beta, yl = y, b2 = bl * bl;
  constexpr int kMax = 4000;
  constexpr ld kPoleTol = 1e-12L;

  ld sum = 1.0L;
  // Family A: (-1)^n/n! e^{n beta y} Gamma(1 - n beta^2); family B with beta -> 1/beta.
  // When n beta^2 = m is an integer, A_n and B_m share a pole and are summed
  // through their finite limit.
  std::vector<char> skip_b(kMax + 1, 0);
  auto run = [&](ld rate, ld c, bool family_a) {
    ld peak = -INFINITY;
    for (int n = 1; n <= kMax; ++n) {
      if (!family_a && skip_b[n]) continue;
      const ld m_real = n * c;
      const ld m_round = std::round(m_real);
      ld logmag;
      ld term;
      if (m_round >= 1.0L && std::fabs(m_real - m_round) < kPoleTol * std::max<ld>(1.0L, m_round)) {
        if (!family_a) continue;  // already paired from family A
        const int m = static_cast<int>(m_round);
        if (m <= kMax) skip_b[m] = 1;
        const ld lf = boost::math::lgamma(static_cast<ld>(n + 1)) + boost::math::lgamma(static_cast<ld>(m));
        logmag = n * bl * yl - lf;
        const ld bracket = yl / bl - boost::math::digamma(static_cast<ld>(m)) -
                           boost::math::digamma(static_cast<ld>(n)) / b2 - 1.0L / m;
        term = (((n + m) % 2 == 0) ? 1.0L : -1.0L) * std::exp(logmag) * bracket;
        logmag += std::log(std::fabs(bracket) + 1e-300L);
      } else {
        int sg = 1;
        const ld lg = boost::math::lgamma(1.0L - m_real, &sg);
        logmag = n * rate * yl - boost::math::lgamma(static_cast<ld>(n + 1)) + lg;
        term = ((n % 2 == 0) ? 1.0L : -1.0L) * sg * std::exp(logmag);
      }
      sum += term;
      if (logmag > peak) peak = logmag;
      if (n > 3 && logmag < std::min<ld>(peak, 0.0L) - 50.0L) break;
    }
  };
  run(bl, b2, true);
  run(1.0L / bl, 1.0L / b2, false);
  return static_cast<double>(sum);
}

double pdf_max_full_circle(double x) {
  if (x < -700.0) return -std::exp(x) * (x + 2.0 * kEulerGamma);
  const double u = 2.0 * std::exp(0.5 * x);
  if (u > 700.0) return 0.0;
  return 2.0 * std::exp(x) * specfun::bessel_k(0, u);
}

double survival_max_full_circle(double x) {
  if (x < -700.0) return 1.0;
  const double u = 2.0 * std::exp(0.5 * x);
  if (u > 700.0) return 0.0;
  return u * specfun::bessel_k(1, u);
}

double cdf_max_full_circle(double x) {
  if (x < -20.0) {
    // 1 - g from the small-argument expansion, free of cancellation
    const double e = std::exp(x);
    return -e * (x - 1.0 + 2.0 * kEulerGamma) - e * e * (0.5 * x - 1.25 + kEulerGamma);
  }
  return 1.0 - survival_max_full_circle(x);
}

double cdf_asymptotics_full_circle(double x) {
  if (!(x < -3.0)) throw DomainError("cdf_asymptotics_full_circle: requires x < -3");
  const double e = std::exp(x);
  return 1.0 + e * (x - 1.0 + 2.0 * kEulerGamma) + e * e * (0.5 * x - 1.25 + kEulerGamma);
}

double cumulant_max_full_circle(int n) {
  if (n < 1) throw DomainError("cumulant order must be positive");
  if (n == 1) return -2.0 * kEulerGamma;
  const double f = boost::math::factorial<double>(static_cast<unsigned>(n - 1));
  return ((n % 2 == 0) ? 2.0 : -2.0) * f * boost::math::zeta(static_cast<double>(n));
}

double clm_density_fourier(double phi, double beta) {
  if (!(beta > 1.0)) throw DomainError("clm_density: beta must exceed 1");
  // (1/pi) int_0^inf Re[e^{-i s phi} Gamma(1+is)^2 / Gamma(1+is/beta)] ds,
  // trapezoidal rule; the integrand is analytic for |Im s| < 1.
  constexpr double h = 0.02;
  double sum = 0.5;
  int quiet = 0;
  for (int k = 1; k < 200000; ++k) {
    const double s = k * h;
    const cplx lf = 2.0 * log_gamma(cplx{1.0, s}) - log_gamma(cplx{1.0, s / beta}) - cplx{0.0, s * phi};
    sum += std::exp(lf).real();
    if (lf.real() < -42.0) {
      if (++quiet > 8) return h * sum / kPi;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("clm_density: Fourier integral did not converge");
}

double clm_density_series(double phi, double beta) {
  if (!(beta > 1.0)) throw DomainError("clm_density: beta must exceed 1");
  double sum = 0.0;
  double peak = -INFINITY;
  for (int n = 1; n < 2000; ++n) {
    const double a = 1.0 - n / beta;
    const double lf = boost::math::lgamma(n + 1.0) + boost::math::lgamma(static_cast<double>(n));
    const double scale = std::exp(n * phi - lf);
    const double body = specfun::rgamma(a) * (n * phi + 2.0 - 2.0 * n * specfun::digamma(n + 1.0)) +
                        (n / beta) * specfun::digamma_over_gamma(a);
    const double term = -scale * body;
    sum += term;
    const double lm = std::log(std::fabs(term) + 1e-320);
    peak = std::max(peak, lm);
    if (n > 3 && lm < peak - 46.0) break;
  }
  return sum;
}

double clm_density(double phi, double beta) {
  if (phi < -10.0) return clm_density_series(phi, beta);
  return std::max(0.0, clm_density_fourier(phi, beta));
}

cplx log_mellin_mesoscopic(cplx s) {
  static const double lg52 = log_barnes_g(2.5);
  return (2.0 * s * s + s - 2.0) * std::log(2.0) - 2.0 * lg52 - (s - 1.0) * std::log(kPi) - log_gamma(s) -
         log_gamma(s + 2.0) + 2.0 * (specfun::log_barnes_g(s + 1.5) - specfun::log_barnes_g(s));
}

namespace {

// log of M(s) Gamma(s) without forming Gamma(s) twice.
cplx log_mesoscopic_density_transform(cplx s) {
  static const double lg52 = log_barnes_g(2.5);
  return (2.0 * s * s + s - 2.0) * std::log(2.0) - 2.0 * lg52 - (s - 1.0) * std::log(kPi) - log_gamma(s + 2.0) +
         2.0 * (specfun::log_barnes_g(s + 1.5) - specfun::log_barnes_g(s));
}

// M(s) Gamma(s) is analytic for Re s > 0. Two lines per function: the one
// further right keeps e^{s0 u} from amplifying roundoff when y > 0.
const VerticalLine& mesoscopic_density_line(bool right) {
  static const VerticalLine near(log_mesoscopic_density_transform, 0.5, 0.02);
  static const VerticalLine far(log_mesoscopic_density_transform, 2.0, 0.02);
  return right ? far : near;
}

// M(s) Gamma(s-1) = M(s) Gamma(s)/(s-1): rightmost singularity s = 1
cplx log_mesoscopic_g_transform(cplx s) { return log_mesoscopic_density_transform(s) - std::log(s - 1.0); }

const VerticalLine& mesoscopic_g_line(bool right) {
  static const VerticalLine near(log_mesoscopic_g_transform, 1.5, 0.02);
  static const VerticalLine far(log_mesoscopic_g_transform, 2.5, 0.02);
  return right ? far : near;
}

}  // namespace

double mesoscopic_density(double y) { return std::exp(y) * mesoscopic_density_line(y > 0.0)(-y); }

double mesoscopic_g(double y) { return std::exp(y) * mesoscopic_g_line(y > 0.0)(-y); }

double mesoscopic_cumulant(int n) {
  if (n < 1) throw DomainError("cumulant order must be positive");
  if (n == 1) return 3.5 - 2.0 * kEulerGamma - kLog2Pi;
  if (n == 2) return 4.0 * kPi * kPi / 3.0 - 6.75;
  const double f = boost::math::factorial<double>(static_cast<unsigned>(n - 1));
  const double p = std::ldexp(1.0, n);
  const double body = boost::math::zeta(n - 1.0) * (p - 4.0) - boost::math::zeta(static_cast<double>(n)) * (3.0 * p - 4.0) +
                      2.0 * p - 1.0 - 1.0 / p;
  return ((n % 2 == 1) ? 1.0 : -1.0) * f * body;
}

double mu_typical(double x, double N, double L) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("mu_typical: x must lie in (0,1)");
  if (!(L > 0.0 && L <= kTwoPi + 1e-12)) throw DomainError("mu_typical: L must lie in (0, 2pi]");
  const double NL = N * L / kTwoPi;
  if (!(NL >= 8.0)) throw DomainError("mu_typical: requires N L / 2pi >= 8");
  const double lnl = std::log(NL);
  double r = -x * x * lnl - 0.5 * std::log(kPi * lnl) + 2.0 * log_barnes_g(1.0 + x) - log_barnes_g(1.0 + 2.0 * x) -
             std::log(2.0 * x) - log_gamma(1.0 - x * x);
  if (!is_full_circle(L)) r -= x * x * kLog2Pi;
  return r;
}

double density_sojourn_full_circle(double xi, double x) {
  if (!(xi > 0.0)) throw DomainError("density_sojourn_full_circle: xi must be positive");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("density_sojourn_full_circle: x must lie in (0,1)");
  return density_scaled_moment(xi, x);
}

namespace {

double sojourn_constant(double x) {
  using specfun::log_double_gamma;
  return 2.0 * log_double_gamma(1.0 / x + x, x) + log_double_gamma(2.0 * x + 2.0 / x, x) -
         log_double_gamma(1.5 * x + 1.0 / x, x) - log_double_gamma(1.5 / x + x, x) -
         log_double_gamma(1.5 * x + 1.5 / x, x);
}

cplx log_mellin_sojourn_with(cplx s, double x, double constant) {
  using specfun::log_double_gamma;
  const double x2 = x * x;
  const cplx xs = x * s;
  const cplx a = (s - 1.0) * (2.0 + x2 * (2.0 * s + 1.0)) * std::log(2.0) + (1.0 - s) * std::log(kPi) + constant;
  return a + log_gamma(1.0 + x2 * (s - 1.0)) + log_double_gamma(0.5 * x + 1.0 / x + xs, x) +
         log_double_gamma(1.5 / x + xs, x) + log_double_gamma(0.5 * x + 1.5 / x + xs, x) -
         log_double_gamma(x + 2.0 / x + xs, x) - 2.0 * log_double_gamma(1.0 / x + xs, x);
}

void check_sojourn_x(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("sojourn: x must lie in (0,1)");
}

}  // namespace

cplx log_mellin_sojourn(cplx s, double x) {
  check_sojourn_x(x);
  return log_mellin_sojourn_with(s, x, sojourn_constant(x));
}

cplx mellin_sojourn(cplx s, double x) { return std::exp(log_mellin_sojourn(s, x)); }

SojournMesoscopic::SojournMesoscopic(double x) : x_(x) {
  check_sojourn_x(x);
  const double c = sojourn_constant(x);
  // rightmost singularity: pole of Gamma(1 + x^2 (s - 1)) at s = 1 - 1/x^2
  const double s0 = 1.5 - 1.0 / (x * x);
  auto f = [x, c](cplx s) { return log_mellin_sojourn_with(s, x, c); };
  right_ = std::make_shared<VerticalLine>(f, s0, 0.05);
  // M is analytic to the right; a line at Re s = 3 keeps e^{s0 log xi}
  // from amplifying roundoff when xi is small.
  left_ = std::make_shared<VerticalLine>(f, 3.0, 0.05);
}

double SojournMesoscopic::operator()(double xi) const {
  if (!(xi > 0.0)) throw DomainError("density_sojourn_mesoscopic: xi must be positive");
  const auto& line = xi >= 1.0 ? *right_ : *left_;
  return std::max(0.0, line(std::log(xi)) / (xi * xi));
}

double density_sojourn_mesoscopic(double xi, double x) { return SojournMesoscopic(x)(xi); }

CountingScale counting_typical(double x, double M) {
  if (!(x > 0.0 && x < 2.0)) throw DomainError("counting_typical: x must lie in (0,2)");
  if (!(M > 1.0)) throw DomainError("counting_typical: M must exceed 1");
  const double lm = std::log(M);
  const double lg = log_gamma(1.0 - 0.25 * x * x);
  const double lt = (1.0 - 0.25 * x * x) * lm - std::log(x) - 0.5 * std::log(kPi * lm) - lg;
  return {lt, lt + lg};
}

double threshold_extreme(double M, double c) {
  if (!(M >= 16.0)) throw DomainError("threshold_extreme: requires M >= 16");
  const double lm = std::log(M);
  return 2.0 - c * std::log(lm) / lm;
}

double extreme_shift(double N, double c) {
  if (!(N > 1.0)) throw DomainError("extreme_shift: requires N > 1");
  return -2.0 * std::log(N) + c * std::log(std::log(N));
}

double freezing_curve(double beta) {
  if (!(beta > 0.0)) throw DomainError("freezing_curve: beta must be positive");
  return beta <= 1.0 ? beta + 1.0 / beta : 2.0;
}

double log_pathintegral_rhs(double p, double beta, double variance) {
  if (p < 0.0) throw DomainError("pathintegral_rhs: p must be nonnegative");
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("pathintegral_rhs: beta must lie in (0,1)");
  if (!(variance > 0.0)) throw DomainError("pathintegral_rhs: variance must be positive");
  if (p == 0.0) return 0.0;
  const double b2 = beta * beta;
  const double lq = std::log(p) + 0.5 * b2 * variance - log_gamma(1.0 - b2);
  return log_stretched_laplace(std::exp(lq), b2);
}

double pathintegral_rhs(double p, double beta, double variance) {
  return std::exp(log_pathintegral_rhs(p, beta, variance));
}

ArithmeticFactor arithmetic_factor(double x, std::uint64_t prime_limit, double tolerance) {
  if (!(x >= 0.0)) throw DomainError("arithmetic_factor: x must be nonnegative");
  if (prime_limit < 100) throw DomainError("arithmetic_factor: prime_limit must be at least 100");
  const auto primes = specfun::primes_up_to(prime_limit);
  const double x2 = x * x;
  long double acc = 0.0L;
  for (std::uint32_t pu : primes) {
    const double p = pu;
    // S_p - 1 = sum_{m>=1} ((x)_m / m!)^2 p^{-m}
    double c = 1.0, pw = 1.0, tail = 0.0;
    for (int m = 0; m < 400; ++m) {
      c *= (x + m) / (m + 1.0);
      pw /= p;
      const double t = c * c * pw;
      tail += t;
      if (t < 1e-19 * (1.0 + tail)) break;
    }
    acc += static_cast<long double>(x2 * std::log1p(-1.0 / p)) + static_cast<long double>(std::log1p(tail));
  }
  const double P = static_cast<double>(prime_limit);
  const double log_tail = -0.25 * x2 * (x - 1.0) * (x - 1.0) / (P * std::log(P));
  ArithmeticFactor r{};
  r.truncated = std::exp(static_cast<double>(acc));
  r.log_tail = log_tail;
  r.value = std::exp(static_cast<double>(acc) + log_tail);
  r.converged = std::fabs(log_tail) < tolerance;
  r.prime_limit = prime_limit;
  return r;
}

}  // namespace logfreeze::theory
