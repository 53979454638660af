// Double gamma function G_x(z) from its integral representation
//   log G_x(z) = (z - Q/2)/2 log 2pi
//     + int_0^inf dt/t [ (e^{-Qt/2} - e^{-zt}) / ((1 - e^{-xt})(1 - e^{-t/x}))
//                        + e^{-t}/2 (Q/2 - z)^2 + (Q/2 - z)/t ],   Q = x + 1/x,
// valid for Re z > 0. Other arguments are reached with the shift relation
//   G_x(z + b) = b^{1/2 - b z} (2pi)^{(b-1)/2} Gamma(b z) G_x(z),  b in {x, 1/x}.
#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "logfreeze/error.hpp"
#include "logfreeze/specfun.hpp"

namespace logfreeze::specfun {
namespace {

constexpr int kTerms = 32;
using Series = std::array<cplx, kTerms>;

// Coefficients of (1 - e^{-c t}) / t.
Series one_minus_exp_over_t(double c) {
  Series s{};
  double term = c;  // c^{k+1}/(k+1)! with alternating sign
  for (int k = 0; k < kTerms; ++k) {
    s[k] = (k % 2 == 0) ? term : -term;
    term *= c / (k + 2);
  }
  return s;
}

Series multiply(const Series& a, const Series& b) {
  Series r{};
  for (int i = 0; i < kTerms; ++i)
    for (int j = 0; i + j < kTerms; ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series divide(const Series& num, const Series& den) {
  Series q{};
  for (int k = 0; k < kTerms; ++k) {
    cplx acc = num[k];
    for (int j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

// Integral of the bracketed integrand over [0, ts] from its Taylor series.
cplx small_t_part(cplx z, double x, double ts) {
  const double a = 0.5 * (x + 1.0 / x);
  // n(t) = (e^{-a t} - e^{-z t}) / t
  Series n{};
  cplx pa = -a, pz = -z;
  double fact = 1.0;
  for (int k = 0; k < kTerms; ++k) {
    fact *= (k + 1);
    n[k] = (pa - pz) / fact;
    pa *= -a;
    pz *= -z;
  }
  const Series e = multiply(one_minus_exp_over_t(x), one_minus_exp_over_t(1.0 / x));
  const Series s = divide(n, e);
  const cplx d2 = 0.5 * (a - z) * (a - z);

  cplx sum = 0.0;
  double tp = ts;
  for (int k = 2; k < kTerms; ++k) {
    sum += s[k] * tp / static_cast<double>(k - 1);
    tp *= ts;
  }
  // (e^{-t} - 1)/t integrated termwise
  double term = ts;
  for (int k = 0; k < kTerms; ++k) {
    const double c = term / (k + 1);
    sum += (k % 2 == 0) ? -d2 * c : d2 * c;
    term *= ts / (k + 2);
  }
  return sum;
}

cplx integrand(double t, cplx z, double x) {
  const double a = 0.5 * (x + 1.0 / x);
  const double den = std::expm1(-x * t) * std::expm1(-t / x);
  const cplx num = std::exp(-a * t) - std::exp(-z * t);
  return (num / den + 0.5 * std::exp(-t) * (a - z) * (a - z) + (a - z) / t) / t;
}

cplx integral_representation(cplx z, double x) {
  const double a = 0.5 * (x + 1.0 / x);
  const double ts = std::min({0.1, 0.5 / std::max(1.0, std::abs(z)), 0.3 * x});
  constexpr double kT = 40.0;
  cplx total = small_t_part(z, x, ts);
  auto f = [&](double t) { return integrand(t, z, x); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  const std::array<double, 5> cuts{ts, 1.0, 4.0, 12.0, kT};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    total += GK::integrate(f, cuts[i], cuts[i + 1], 15, 1e-14);
  }
  total += (a - z) / kT;
  return 0.5 * (z - a) * kLog2Pi + total;
}

// log of b^{1/2 - b z} (2pi)^{(b-1)/2} Gamma(b z)
cplx log_shift_factor(cplx z, double b) {
  return (0.5 - b * z) * std::log(b) + 0.5 * (b - 1.0) * kLog2Pi + log_gamma(b * z);
}

bool is_zero_of_double_gamma(cplx z, double x) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  const double r = -z.real();
  const double tol = 1e-13 * std::max(1.0, r);
  for (int m = 0; m / x <= r + tol; ++m) {
    const double rest = r - m / x;
    const double n = std::round(rest / x);
    if (n >= 0.0 && std::fabs(rest - n * x) <= tol) return true;
  }
  return false;
}

}  // namespace

cplx log_double_gamma(cplx z, double x) {
  if (!(x > 0.0)) throw DomainError("log_double_gamma: parameter must be positive");
  if (x > 1.0) x = 1.0 / x;
  if (is_zero_of_double_gamma(z, x)) {
    throw PoleError("log_double_gamma: G_x vanishes at z = " + std::to_string(z.real()));
  }
  // Move Re z up into [1, 1 + 1/x) with the long shift b = 1/x.
  cplx acc = 0.0;
  const double b = 1.0 / x;
  while (z.real() < 1.0) {
    acc += log_shift_factor(z, b);
    z += b;
  }
  return integral_representation(z, x) - acc;
}

}  // namespace logfreeze::specfun
