#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "doctest.h"
#include "logfreeze/error.hpp"
#include "logfreeze/specfun.hpp"
#include "logfreeze/theory.hpp"
#include "oracle_values.hpp"

using namespace logfreeze::theory;
using logfreeze::DomainError;
using logfreeze::PoleError;
using logfreeze::specfun::kEulerGamma;
using logfreeze::specfun::kPi;
using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

namespace {

template <class F>
double integrate(F f, double a, double b, double tol = 1e-13) {
  return GK::integrate(f, a, b, 20, tol);
}

// fixed-step trapezoid for smooth integrands with negligible endpoint values
template <class F>
double trapezoid(F f, double a, double b, double h) {
  const int n = static_cast<int>(std::ceil((b - a) / h));
  const double step = (b - a) / n;
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n; ++i) s += f(a + i * step);
  return s * step;
}

}  // namespace

TEST_CASE("typical partition-function scale") {
  CHECK(z_e_scale({0.5, 1, 64, kTwoPi}) == doctest::Approx(oracle::kLogZe_b05_N64).epsilon(1e-13));
  CHECK(z_e_scale({1e-8, 1, 64, kTwoPi}) == doctest::Approx(std::log(64.0)).epsilon(1e-10));
  const double b = 0.5;
  const double full = z_e_scale({b, 1, 64, kTwoPi});
  const double half = z_e_scale({b, 1, 64, kPi});
  CHECK(half - full == doctest::Approx((1 + b * b) * std::log(0.5) + b * b * std::log(2 * kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(z_e_scale({1.0, 1, 64, kTwoPi}), PoleError);
}

TEST_CASE("moment formulas") {
  const MomentSpec s{0.5, 1, 64, kTwoPi};
  CHECK(moment_full_circle(s) == doctest::Approx(z_e_scale(s) + std::lgamma(0.75)).epsilon(1e-14));
  MomentSpec s2 = s;
  s2.k = 2;
  CHECK(moment_full_circle(s2) - 2 * z_e_scale(s2) == doctest::Approx(0.5723649429247001).epsilon(1e-13));
  s2.k = 4;
  CHECK_THROWS_AS(moment_full_circle(s2), DomainError);

  // mesoscopic k=1 reduces to the typical scale times Gamma(1 - beta^2)
  const MomentSpec m1{0.6, 1, 4096, 0.5};
  CHECK(moment_mesoscopic(m1) == doctest::Approx(z_e_scale(m1) + std::lgamma(1 - 0.36)).epsilon(1e-13));
  MomentSpec m0 = m1;
  m0.beta = 1e-6;
  CHECK(moment_mesoscopic(m0) == doctest::Approx(z_e_scale(m0)).epsilon(1e-10));
  MomentSpec mk = m1;
  mk.k = 3;
  CHECK_THROWS_AS(moment_mesoscopic(mk), DomainError);
}

TEST_CASE("mesoscopic k=2 product equals a 2-fold quadrature of the Selberg integrand") {
  const double b2 = 0.2;
  // int_0^1 int_0^1 |y1 - y2|^{-2 b2}: inner integral by tanh-sinh (endpoint singularity)
  boost::math::quadrature::tanh_sinh<double> ts;
  auto inner = [&](double y1) {
    auto f = [&](double y2) { return std::pow(std::fabs(y1 - y2), -2 * b2); };
    double r = 0;
    if (y1 > 1e-12) r += ts.integrate(f, 0.0, y1);
    if (y1 < 1 - 1e-12) r += ts.integrate(f, y1, 1.0);
    return r;
  };
  boost::math::quadrature::tanh_sinh<double> outer;
  const double selberg = outer.integrate(inner, 0.0, 1.0);
  const MomentSpec m{std::sqrt(b2), 2, 4096, 1.0};
  const double ratio = std::exp(moment_mesoscopic(m) - 2 * z_e_scale(m) - 2 * std::lgamma(1 - b2));
  CHECK(ratio == doctest::Approx(selberg).epsilon(1e-8));
}

TEST_CASE("scaled-moment density") {
  for (double b : {0.3, 0.5, 0.8}) {
    CAPTURE(b);
    // u = log z
    const double norm = integrate([&](double u) { return density_scaled_moment(std::exp(u), b) * std::exp(u); }, -12, 80);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    // mode from a root find on the numerical log-derivative
    auto dlog = [&](double z) {
      const double h = 1e-6 * z;
      return std::log(density_scaled_moment(z + h, b)) - std::log(density_scaled_moment(z - h, b));
    };
    boost::math::tools::eps_tolerance<double> tol(40);
    const auto br = boost::math::tools::bisect(dlog, 0.7, 3.0, tol);
    CHECK(0.5 * (br.first + br.second) == doctest::Approx(std::pow(1 + b * b, -b * b)).epsilon(1e-7));
    const double z = 1e6;
    const double slope = std::log(density_scaled_moment(2 * z, b) / density_scaled_moment(z, b)) / std::log(2.0);
    CHECK(slope == doctest::Approx(-(1 + 1 / (b * b))).epsilon(1e-6));
  }
}

TEST_CASE("lognormal far tail") {
  const double M = 1024;
  CHECK_THROWS_AS(lognormal_tail(2 * std::log(M), 0.5, M), DomainError);
  CHECK(lognormal_tail(16, 0.5, M) == lognormal_tail(16, -0.5, M));
  const double expected = std::log(M) - 0.5 * std::log(4 * kPi * 0.25 * std::log(M)) - 16 - 256 / (std::log(M));
  CHECK(std::log(lognormal_tail(16, 0.5, M)) == doctest::Approx(expected).epsilon(1e-13));
  // crossover at Z ~ M^2 against the scaled-moment density of the lattice model
  for (double b : {0.6, 0.7, 0.8}) {
    CAPTURE(b);
    const double logZe = (1 + b * b) * std::log(M) - std::lgamma(1 - b * b);
    const double logZ = 2 * std::log(M) * (1 + 1e-9);
    const double bulk = std::log(density_scaled_moment(std::exp(logZ - logZe), b)) - logZe;
    const double tail = log_lognormal_tail(logZ, b, M);
    CHECK(std::fabs(tail - bulk) < 2.0);
  }
}

TEST_CASE("g_beta against quadrature reference and Bessel closed form") {
  for (const auto& r : oracle::kGBetaCases) {
    CAPTURE(r[0]);
    CAPTURE(r[1]);
    CHECK(g_beta(r[0], r[1]) == doctest::Approx(r[2]).epsilon(1e-12));
  }
  CHECK(g_beta(0, 1) == doctest::Approx(2 * logfreeze::specfun::bessel_k(1, 2.0)).epsilon(1e-13));
  CHECK(g_beta(-60, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
  double prev = 1.0;
  for (double y = -10; y <= 6; y += 0.25) {
    const double g = g_beta(y, 0.7);
    CHECK(g < prev);
    CHECK(g > 0);
    prev = g;
  }
  CHECK_THROWS_AS(g_beta(0, 1.2), DomainError);
}

TEST_CASE("duality: integral form at beta equals series form at 1/beta") {
  for (double b : {0.4, 0.6, 0.8}) {
    double worst = 0;
    for (int i = 0; i < 49; ++i) {
      const double y = -8 + 12.0 * i / 48;
      worst = std::max(worst, std::fabs(g_beta(y, b) - g_beta_series(y, 1 / b)));
    }
    CAPTURE(b);
    CHECK(worst < 1e-9);
  }
  // the series needs the pole-pair limit whenever n beta^2 is an integer
  CHECK(g_beta_series(-1.0, 1.0) == doctest::Approx(g_beta(-1.0, 1.0)).epsilon(1e-11));
  CHECK(g_beta_series(0.5, 1.0 / std::sqrt(2.0)) == doctest::Approx(g_beta(0.5, 1.0 / std::sqrt(2.0))).epsilon(1e-10));
}

TEST_CASE("full-circle maximum: density, derivative identity, asymptotics") {
  for (double x = -8; x <= 4; x += 0.25) {
    const double h = 1e-4;
    const double fd = -(g_beta(x + h, 1) - g_beta(x - h, 1)) / (2 * h);
    CHECK(fd == doctest::Approx(pdf_max_full_circle(x)).epsilon(1e-7));
    CHECK(survival_max_full_circle(x) == doctest::Approx(g_beta(x, 1)).epsilon(1e-12));
  }
  CHECK(std::fabs(cdf_asymptotics_full_circle(-6) - g_beta(-6, 1)) < 1e-4);
  CHECK(std::fabs(cdf_asymptotics_full_circle(-10) - g_beta(-10, 1)) < 1e-7);
  CHECK_THROWS_AS(cdf_asymptotics_full_circle(-2), DomainError);
  // leading backward tail of 1 - g is -x e^x
  const double x = -40;
  CHECK(cdf_max_full_circle(x) / (-x * std::exp(x)) == doctest::Approx(1.0).epsilon(0.05));

  std::vector<double> m(4, 0.0);
  for (int k = 0; k < 4; ++k) {
    m[k] = integrate([&](double t) { return std::pow(t, k) * pdf_max_full_circle(t); }, -80, 0, 1e-14) +
           integrate([&](double t) { return std::pow(t, k) * pdf_max_full_circle(t); }, 0, 15, 1e-14);
  }
  CHECK(m[0] == doctest::Approx(1.0).epsilon(1e-10));
  const double mean = m[1];
  const double var = m[2] - mean * mean;
  const double k3 = m[3] - 3 * mean * m[2] + 2 * mean * mean * mean;
  CHECK(std::fabs(mean - cumulant_max_full_circle(1)) < 1e-8);
  CHECK(std::fabs(var - kPi * kPi / 3) < 1e-8);
  CHECK(std::fabs(k3 - cumulant_max_full_circle(3)) < 1e-8);
  CHECK(cumulant_max_full_circle(3) == doctest::Approx(-4 * 1.2020569031595942).epsilon(1e-14));
}

TEST_CASE("frozen-phase density") {
  for (const auto& r : oracle::kClmCases) {
    CAPTURE(r[0]);
    CAPTURE(r[1]);
    CHECK(clm_density(r[0], r[1]) == doctest::Approx(r[2]).epsilon(1e-10));
  }
  for (double beta : {1.5, 2.0, 3.0, 7.3}) {
    for (double phi : {-10.5, -12.0, -6.0}) {
      CAPTURE(beta);
      CAPTURE(phi);
      const double f = clm_density_fourier(phi, beta);
      const double s = clm_density_series(phi, beta);
      CHECK(std::fabs(f - s) < 1e-12 + 1e-8 * std::fabs(s));
    }
    const double norm = integrate([&](double p) { return clm_density(p, beta); }, -60, -10, 1e-12) +
                        integrate([&](double p) { return clm_density(p, beta); }, -10, 12, 1e-12);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
  }
  for (double phi : {-3.0, 0.0, 1.5}) CHECK(clm_density(phi, 1e7) == doctest::Approx(pdf_max_full_circle(phi)).epsilon(1e-6));
  CHECK_THROWS_AS(clm_density(0, 1.0), DomainError);
}

TEST_CASE("mesoscopic arc: cumulants and contour density") {
  for (const auto& r : oracle::kMesoCumulants) {
    CAPTURE(r[0]);
    CHECK(mesoscopic_cumulant(static_cast<int>(r[0])) == doctest::Approx(r[1]).epsilon(1e-12));
  }
  std::vector<double> m(3, 0.0);
  for (int k = 0; k < 3; ++k) m[k] = trapezoid([&](double y) { return std::pow(y, k) * mesoscopic_density(y); }, -45, 25, 0.02);
  CHECK(std::fabs(m[0] - 1.0) < 1e-9);
  CHECK(std::fabs(m[1] - mesoscopic_cumulant(1)) < 1e-4);
  CHECK(std::fabs(m[2] - m[1] * m[1] - mesoscopic_cumulant(2)) < 1e-4);
  CHECK((mesoscopic_g(-1e-3) - mesoscopic_g(1e-3)) / 2e-3 == doctest::Approx(mesoscopic_density(0.0)).epsilon(1e-7));
  CHECK(mesoscopic_density(30.0) < 1e-30);
  // g is the survival function of the density
  for (double y : {-5.0, -1.0, 0.5, 2.0, 5.0, 12.0}) {
    const double h = 1e-4;
    CHECK(-(mesoscopic_g(y + h) - mesoscopic_g(y - h)) / (2 * h) == doctest::Approx(mesoscopic_density(y)).epsilon(1e-6));
  }
  const double y = -9;
  const double a1 = 2 * kEulerGamma + std::log(2 * kPi) - 1;
  CHECK(std::fabs(mesoscopic_g(y) - (1 + (y + a1) * std::exp(y))) < 200 * std::exp(2 * y));
}

TEST_CASE("sojourn scales and densities") {
  CHECK(mu_typical(0.5, 64) == doctest::Approx(oracle::kLogMuE_x05_N64).epsilon(1e-13));
  const double x = 1e-5;
  CHECK(mu_typical(x, 1e6) == doctest::Approx(std::log(1 / (2 * x * std::sqrt(kPi * std::log(1e6))))).epsilon(1e-6));
  CHECK(mu_typical(0.5, 4096, 1.0) ==
        doctest::Approx(mu_typical(0.5, 4096 / (2 * kPi), kTwoPi) - 0.25 * std::log(2 * kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(mu_typical(1.0, 64), DomainError);
  CHECK_THROWS_AS(mu_typical(0.5, 64, 0.1), DomainError);

  for (double xx : {0.4, 0.6}) {
    auto f = [&](double u, int k) { return std::exp((k + 1) * u) * density_sojourn_full_circle(std::exp(u), xx); };
    CHECK(integrate([&](double u) { return f(u, 0); }, -6, 60) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate([&](double u) { return f(u, 1); }, -6, 80) == doctest::Approx(std::tgamma(1 - xx * xx)).epsilon(1e-9));
  }
}

TEST_CASE("sojourn Mellin transform") {
  const double x = 0.5;
  CHECK(std::abs(mellin_sojourn({1, 0}, x) - 1.0) < 1e-11);
  CHECK(std::abs(mellin_sojourn({0, 0}, x) - std::tgamma(0.75)) < 1e-10);
  // E{xi^2} from the moment product with k = 2
  const double b2 = x * x;
  double prod = 1;
  for (int j = 1; j <= 2; ++j)
    prod *= std::pow(std::tgamma(1 - (j - 1) * b2), 2) * std::tgamma(1 - j * b2) / std::tgamma(2 - (2 + j - 2) * b2);
  CHECK(std::abs(mellin_sojourn({-1, 0}, x) - prod) < 1e-9 * prod);
  const auto z = mellin_sojourn({0.3, 1.7}, x);
  CHECK(std::abs(mellin_sojourn({0.3, -1.7}, x) - std::conj(z)) < 1e-12);

  // full-circle analogue Gamma(1 - x^2 (1 - s)) inverts to the closed-form density
  logfreeze::VerticalLine full(
      [&](std::complex<double> s) { return logfreeze::specfun::log_gamma(1.0 - x * x * (1.0 - s)); },
      1.5 - 1 / (x * x), 0.05);
  for (double xi : {0.5, 1.0, 2.0, 6.0}) {
    CHECK(full(std::log(xi)) / (xi * xi) == doctest::Approx(density_sojourn_full_circle(xi, x)).epsilon(1e-9));
  }
}

TEST_CASE("mesoscopic sojourn density by contour inversion") {
  const double x = 0.5;
  const double s1 = 1 - 1 / (x * x);
  const SojournMesoscopic P(x);
  auto mom = [&](double k) { return trapezoid([&](double u) { return std::exp((k + 1) * u) * P(std::exp(u)); }, -9, 40, 0.01); };
  CHECK(mom(0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::fabs(mom(1) - mellin_sojourn({0, 0}, x).real()) < 1e-5);
  CHECK(std::fabs(mom(2) - mellin_sojourn({-1, 0}, x).real()) < 1e-5);
  CHECK(std::fabs(mom(-1) - mellin_sojourn({2, 0}, x).real()) < 1e-5);
  for (double u = -3; u < 8; u += 0.5) CHECK(P(std::exp(u)) >= 0.0);
  // the two contours agree across the switch at xi = 1
  logfreeze::VerticalLine hi([&](std::complex<double> s) { return log_mellin_sojourn(s, x); }, s1 + 0.5, 0.05);
  CHECK(hi(0.0) == doctest::Approx(P(1.0)).epsilon(1e-10));
  CHECK(hi(std::log(0.999)) / (0.999 * 0.999) == doctest::Approx(P(0.999)).epsilon(1e-10));
  // power-law tail xi^{-1-1/x^2}: amplitude is the residue of M at s = 1 - 1/x^2.
  // A double pole at s = -1/x^2 gives a slow (log xi)/xi correction.
  const double e = 1e-4;
  const double res = 0.5 * e * (mellin_sojourn({s1 + e, 0}, x).real() - mellin_sojourn({s1 - e, 0}, x).real());
  const double r3 = P(1e3) * std::pow(1e3, 1 - s1 + 1) / res;
  const double r6 = P(1e6) * std::pow(1e6, 1 - s1 + 1) / res;
  CHECK(std::fabs(r6 - 1) < 5e-4);
  CHECK(std::fabs(r6 - 1) < std::fabs(r3 - 1));
}

TEST_CASE("counting scale and thresholds") {
  for (int e : {10, 14, 18}) {
    const double M = std::ldexp(1.0, e);
    const double lt = counting_typical(threshold_extreme(M), M).log_typical;
    CAPTURE(e);
    CHECK(lt > -2.0);
    CHECK(lt < 2.0);
  }
  const auto c = counting_typical(1.0, 4096);
  CHECK(c.log_mean - c.log_typical == doctest::Approx(std::lgamma(0.75)).epsilon(1e-14));
  // exponent of M
  const double d = counting_typical(1.2, 1e12).log_typical - counting_typical(1.2, 1e11).log_typical;
  CHECK(d == doctest::Approx(0.64 * std::log(10.0) - 0.5 * std::log(12.0 / 11.0)).epsilon(1e-12));
  CHECK(threshold_extreme(std::exp(std::exp(2.0))) == doctest::Approx(2.0 - 3.0 * std::exp(-2.0)).epsilon(1e-15));
  CHECK(threshold_extreme(1e6, 0.5) > threshold_extreme(1e6, 1.5));
  CHECK_THROWS_AS(threshold_extreme(8), DomainError);
  CHECK_THROWS_AS(counting_typical(2.0, 100), DomainError);
  CHECK(extreme_shift(50) == doctest::Approx(-2 * std::log(50.0) + 1.5 * std::log(std::log(50.0))).epsilon(1e-15));
}

TEST_CASE("freezing curve") {
  CHECK(freezing_curve(1.0) == 2.0);
  CHECK(freezing_curve(0.5) == 2.5);
  CHECK(freezing_curve(3.0) == 2.0);
  CHECK(freezing_curve(1.0 - 1e-12) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(freezing_curve(0.0), DomainError);
}

TEST_CASE("path-integral right-hand side") {
  CHECK(pathintegral_rhs(0, 0.5, 3.0) == 1.0);
  CHECK(pathintegral_rhs(1, 0.5, oracle::kTwoHarmonic512) ==
        doctest::Approx(oracle::kPathIntegral_p1_b05_K512).epsilon(1e-11));
  // p -> inf, beta -> 0 with p beta^2 = mu: e^{p} RHS -> e^{-mu z_e'(0)} Gamma(1 + mu)
  const double var = 3.0, mu = 0.7;
  const double zp = 0.5 * var - kEulerGamma;
  const double target = -mu * zp + std::lgamma(1 + mu);
  double prev_err = 1e9;
  for (double b2 : {1e-3, 1e-4, 1e-5}) {
    const double p = mu / b2;
    const double err = std::fabs(p + log_pathintegral_rhs(p, std::sqrt(b2), var) - target);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-3);
}

TEST_CASE("arithmetic factor") {
  CHECK(arithmetic_factor(1.0).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(arithmetic_factor(0.0).value == 1.0);
  for (const auto& r : oracle::kArithmeticFactor) {
    CAPTURE(r[0]);
    const auto a = arithmetic_factor(r[0], 1000000);
    CHECK(a.truncated == doctest::Approx(r[2]).epsilon(1e-12));
    CHECK(a.value == doctest::Approx(r[1]).epsilon(1e-8));
    CHECK(a.converged);
  }
  CHECK(arithmetic_factor(2.0, 1000000).value == doctest::Approx(6 / (kPi * kPi)).epsilon(1e-8));
  CHECK_FALSE(arithmetic_factor(3.0, 100, 1e-9).converged);
  CHECK_THROWS_AS(arithmetic_factor(0.5, 50), DomainError);
}
