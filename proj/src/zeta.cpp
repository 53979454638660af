#include "logfreeze/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <mutex>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "logfreeze/error.hpp"
#include "logfreeze/specfun.hpp"
#include "logfreeze/theory.hpp"

namespace logfreeze::zeta {

namespace {

#include "rs_coefficients.inc"

using cplx = std::complex<double>;
using ld = long double;
constexpr ld kTwoPiL = 6.283185307179586476925286766559005768L;
constexpr double kPi = 3.14159265358979323846;
constexpr double kTMax = 1e9;
constexpr double kRsCutoff = 1000.0;

struct Tables {
  std::vector<ld> logn;
  std::vector<double> rsqrt;
  Tables() {
    const std::size_t m = static_cast<std::size_t>(std::sqrt(kTMax / (2 * kPi))) + 8;
    logn.resize(m + 1);
    rsqrt.resize(m + 1);
    for (std::size_t n = 1; n <= m; ++n) {
      logn[n] = std::log(static_cast<ld>(n));
      rsqrt[n] = 1.0 / std::sqrt(static_cast<double>(n));
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

ld theta_ld(ld t) {
  const ld r = 1.0L / t, r2 = r * r;
  const ld series =
      r * (1.0L / 48 + r2 * (7.0L / 5760 + r2 * (31.0L / 80640 + r2 * (127.0L / 430080 + r2 * (511.0L / 1216512)))));
  return 0.5L * t * std::log(t / kTwoPiL) - 0.5L * t - kTwoPiL / 16 + series;
}

template <std::size_t K>
double horner(const double (&c)[K], double z) {
  double r = 0.0;
  for (std::size_t i = K; i-- > 0;) r = r * z + c[i];
  return r;
}

double reduce(ld phase) { return static_cast<double>(phase - kTwoPiL * std::nearbyint(phase / kTwoPiL)); }

double z_riemann_siegel(double t) {
  const auto& tb = tables();
  const ld tl = t;
  const ld a = std::sqrt(tl / kTwoPiL);
  const std::size_t m = static_cast<std::size_t>(a);
  const double p = static_cast<double>(a - static_cast<ld>(m));
  const ld th = theta_ld(tl);
  double sum = 0.0;
  for (std::size_t n = 1; n <= m; ++n) sum += tb.rsqrt[n] * std::cos(reduce(th - tl * tb.logn[n]));
  const double tau = std::sqrt(2 * kPi / t);
  const double z = p - 0.5;
  const double corr =
      horner(kRsC0, z) +
      tau * (horner(kRsC1, z) + tau * (horner(kRsC2, z) + tau * (horner(kRsC3, z) + tau * horner(kRsC4, z))));
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m-1}
  return 2.0 * sum + sign * std::sqrt(tau) * corr;
}

double z_euler_maclaurin(double t) {
  const cplx zv = euler_maclaurin_zeta({0.5, t});
  const double th = reduce(theta_ld(t));
  return (std::polar(1.0, th) * zv).real();
}

void check_window(double T, double L, int ppu) {
  if (!(T >= 10.0 && T + L <= kTMax)) throw DomainError("zeta window: need 10 <= T and T + L <= 1e9");
  if (!(L > 0.0 && L <= 2 * kPi + 1e-12)) throw DomainError("zeta window: L must lie in (0, 2 pi]");
  const double density = std::log(std::max(T, 2 * kPi * std::exp(1.0)) / (2 * kPi)) / (2 * kPi);
  if (ppu < 8.0 * density) throw DomainError("zeta window: points_per_unit below 8 x zero density");
}

struct Grid {
  double h;
  std::vector<double> z;  // Z at T + j h, j = 0..n
};

// Riemann-Siegel main sum on an equispaced grid: the terms n^{-1/2} e^{-i t log n}
// are advanced by a fixed rotation and reseeded in long double every kReseed steps.
void rs_grid(double T, double h, std::vector<double>& out) {
  constexpr std::size_t kReseed = 64;
  const auto& tb = tables();
  const std::size_t n_pts = out.size();
  const std::size_t m_max =
      static_cast<std::size_t>(std::sqrt((T + h * static_cast<double>(n_pts)) / (2 * kPi))) + 1;
  std::vector<double> cr(m_max + 1), ci(m_max + 1), sr(m_max + 1), si(m_max + 1);
  for (std::size_t n = 1; n <= m_max; ++n) {
    const double a = reduce(-static_cast<ld>(h) * tb.logn[n]);
    sr[n] = std::cos(a);
    si[n] = std::sin(a);
  }
  for (std::size_t j = 0; j < n_pts; ++j) {
    const ld tl = static_cast<ld>(T) + static_cast<ld>(h) * static_cast<ld>(j);
    const double t = static_cast<double>(tl);
    const ld a = std::sqrt(tl / kTwoPiL);
    const std::size_t m = static_cast<std::size_t>(a);
    if (j % kReseed == 0) {
      for (std::size_t n = 1; n <= m_max; ++n) {
        const double ph = reduce(-tl * tb.logn[n]);
        cr[n] = tb.rsqrt[n] * std::cos(ph);
        ci[n] = tb.rsqrt[n] * std::sin(ph);
      }
    }
    double re = 0.0, im = 0.0;
    for (std::size_t n = 1; n <= m; ++n) {
      re += cr[n];
      im += ci[n];
    }
    const double th = reduce(theta_ld(tl));
    const double sum = std::cos(th) * re - std::sin(th) * im;
    const double p = static_cast<double>(a - static_cast<ld>(m));
    const double tau = std::sqrt(2 * kPi / t);
    const double z = p - 0.5;
    const double corr =
        horner(kRsC0, z) +
        tau * (horner(kRsC1, z) + tau * (horner(kRsC2, z) + tau * (horner(kRsC3, z) + tau * horner(kRsC4, z))));
    const double sign = (m % 2 == 1) ? 1.0 : -1.0;
    out[j] = 2.0 * sum + sign * std::sqrt(tau) * corr;
    for (std::size_t n = 1; n <= m_max; ++n) {
      const double r = cr[n] * sr[n] - ci[n] * si[n];
      ci[n] = cr[n] * si[n] + ci[n] * sr[n];
      cr[n] = r;
    }
  }
}

// n + 1 nodes T + (j + offset) h; with offset > 0 the last node is replaced by T + L
Grid scan(double T, double L, int ppu, double offset = 0.0) {
  const std::size_t n = static_cast<std::size_t>(std::ceil(L * ppu));
  Grid g{L / static_cast<double>(n), std::vector<double>(n + 1)};
  const double t0 = T + offset * g.h;
  if (T >= kRsCutoff) {
    rs_grid(t0, g.h, g.z);
  } else {
    for (std::size_t j = 0; j <= n; ++j) g.z[j] = hardy_z(t0 + static_cast<double>(j) * g.h);
  }
  if (offset > 0.0) g.z[n] = hardy_z(T + L);
  return g;
}

double cached_arithmetic(double x) {
  static std::mutex mu;
  static std::map<double, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(x);
  if (it != cache.end()) return it->second;
  const double v = theory::arithmetic_factor(x).value;
  cache.emplace(x, v);
  return v;
}

}  // namespace

double riemann_siegel_theta(double t) {
  if (!(t >= 10.0)) throw DomainError("riemann_siegel_theta: requires t >= 10");
  return static_cast<double>(theta_ld(t));
}

double riemann_siegel_z(double t) {
  if (!(t >= 100.0 && t <= kTMax)) throw DomainError("riemann_siegel_z: t outside [100, 1e9]");
  return z_riemann_siegel(t);
}

double hardy_z(double t) {
  if (!(t >= 10.0 && t <= kTMax)) throw DomainError("hardy_z: t outside the validated range [10, 1e9]");
  return t < kRsCutoff ? z_euler_maclaurin(t) : z_riemann_siegel(t);
}

CriticalPoint zeta_half_line(double t) {
  const double z = hardy_z(t);
  return {t, z, std::fabs(z)};
}

std::complex<double> euler_maclaurin_zeta(std::complex<double> s) {
  if (s == cplx(1.0, 0.0)) throw PoleError("euler_maclaurin_zeta: pole at s = 1");
  if (!(s.real() > 0.0)) throw DomainError("euler_maclaurin_zeta: requires Re s > 0");
  if (!(std::fabs(s.imag()) <= 1e5)) throw DomainError("euler_maclaurin_zeta: requires |Im s| <= 1e5");
  const double as = std::abs(s);
  const std::size_t N = 30 + static_cast<std::size_t>(std::ceil(1.5 * as / (2 * kPi)));
  const ld t = s.imag();
  cplx sum = 0.0;
  for (std::size_t n = N - 1; n >= 1; --n) {
    const ld ln = std::log(static_cast<ld>(n));
    sum += std::polar(std::exp(-s.real() * static_cast<double>(ln)), -reduce(t * ln));
  }
  const double lN = std::log(static_cast<double>(N));
  const ld lNl = std::log(static_cast<ld>(N));
  const cplx Nms = std::polar(std::exp(-s.real() * lN), -reduce(t * lNl));  // N^{-s}
  const double Nd = static_cast<double>(N);
  sum += Nms * Nd / (s - 1.0) + 0.5 * Nms;
  // B_{2k}/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
  cplx c = s * Nms / Nd / 2.0;
  for (int k = 1; k <= 80; ++k) {
    const cplx term = boost::math::bernoulli_b2n<double>(k) * c;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    c *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k) / ((2.0 * k + 1.0) * (2.0 * k + 2.0) * Nd * Nd);
  }
  return sum;
}

int default_points_per_unit(double T) {
  const double density = std::log(std::max(T, 2 * kPi * std::exp(1.0)) / (2 * kPi)) / (2 * kPi);
  return std::max(16, static_cast<int>(std::ceil(16.0 * density)));
}

WindowRecord scan_window_max(double T, double L, int ppu, double grid_offset) {
  if (ppu == 0) ppu = default_points_per_unit(T);
  check_window(T, L, ppu);
  if (!(grid_offset >= 0.0 && grid_offset < 1.0)) throw DomainError("scan_window_max: grid_offset must lie in [0, 1)");
  const Grid g = scan(T, L, ppu, grid_offset);
  const std::size_t n = g.z.size() - 1;
  auto node = [&](std::size_t j) { return j == n ? T + L : T + (static_cast<double>(j) + grid_offset) * g.h; };
  std::size_t j = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (std::fabs(g.z[i]) > std::fabs(g.z[j])) j = i;
  double best = std::fabs(g.z[j]), arg = node(j);
  if (grid_offset > 0.0) {
    const double z0 = std::fabs(hardy_z(T));
    if (z0 > best) best = z0, arg = T;
  }
  const double tj = arg;
  const double lo = std::max(T, tj - g.h), hi = std::min(T + L, tj + g.h);
  std::uintmax_t iters = 60;
  // offset variable: brent's tolerance is relative to |t|
  const auto r = boost::math::tools::brent_find_minima([tj](double u) { return -std::fabs(hardy_z(tj + u)); },
                                                       lo - tj, hi - tj, 40, iters);
  if (-r.second > best) {
    best = -r.second;
    arg = tj + r.first;
  }
  const double x = std::log(T / (2 * kPi));
  const double sigma = (x > 1.0) ? -2.0 * std::log(best) + 2.0 * std::log(x) - 1.5 * std::log(std::log(x))
                                 : std::numeric_limits<double>::quiet_NaN();
  return {T, L, best, arg, sigma};
}

std::vector<double> zeta_partition(double T, const std::vector<double>& betas, int ppu) {
  if (ppu == 0) ppu = default_points_per_unit(T);
  check_window(T, 2 * kPi, ppu);
  for (double b : betas)
    if (!(b > 0.0)) throw DomainError("zeta_partition: beta must be positive");
  const Grid g = scan(T, 2 * kPi, ppu);
  const std::size_t n = g.z.size();
  std::vector<double> la(n);
  for (std::size_t j = 0; j < n; ++j) la[j] = std::log(std::fabs(g.z[j]));
  const double pref = std::log(std::log(T / (2 * kPi)) / (2 * kPi)) + std::log(g.h);
  std::vector<double> out;
  for (double b : betas) {
    double mx = -std::numeric_limits<double>::infinity();
    for (double v : la) mx = std::max(mx, 2.0 * b * v);
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
      s += w * std::exp(2.0 * b * la[j] - mx);
    }
    out.push_back(pref + mx + std::log(s));
  }
  return out;
}

double zeta_partition(double T, double beta, int ppu) { return zeta_partition(T, std::vector<double>{beta}, ppu)[0]; }

double d_statistic(double T, double beta, double log_ZT) {
  if (!(beta > 0.0)) throw DomainError("d_statistic: beta must be positive");
  const double x = std::log(T / (2 * kPi));
  if (!(x > 1.0)) throw DomainError("d_statistic: requires log(T/2pi) > 1");
  const double lx = std::log(x);
  const double logP = std::log(cached_arithmetic(beta)) + 2.0 * specfun::log_barnes_g(1.0 + beta) -
                      specfun::log_barnes_g(1.0 + 2.0 * beta) + beta * beta * lx;
  return beta + 1.0 / beta + (log_ZT - lx - logP) / (beta * lx);
}

double zeta_high_measure(double T, double L, double x, int ppu) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("zeta_high_measure: x must lie in (0,1)");
  if (ppu == 0) ppu = default_points_per_unit(T);
  check_window(T, L, ppu);
  const Grid g = scan(T, L, ppu);
  const double level = x * std::log(L / (2 * kPi) * std::log(T / (2 * kPi)));
  std::size_t cnt = 0;
  const std::size_t n = g.z.size() - 1;  // [T, T + L)
  for (std::size_t j = 0; j < n; ++j) cnt += (std::log(std::fabs(g.z[j])) >= level) ? 1 : 0;
  return static_cast<double>(cnt) / static_cast<double>(n);
}

double zeta_measure_scale(double T, double x) {
  return cached_arithmetic(x) * std::exp(theory::mu_typical(x, std::log(T / (2 * kPi)), 2 * kPi));
}

int count_sign_changes(double T, double L, int ppu) {
  if (ppu == 0) ppu = default_points_per_unit(T);
  check_window(T, L, ppu);
  const Grid g = scan(T, L, ppu);
  int c = 0;
  for (std::size_t j = 1; j < g.z.size(); ++j) c += (g.z[j - 1] * g.z[j] < 0.0) ? 1 : 0;
  return c;
}

double find_zero(double a, double b, double tol) {
  const double fa = hardy_z(a), fb = hardy_z(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw DomainError("find_zero: no sign change in [a, b]");
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(
      [](double t) { return hardy_z(t); }, a, b, fa, fb,
      [tol](double u, double v) { return std::fabs(u - v) <= tol; }, iters);
  return 0.5 * (r.first + r.second);
}

double euler_product(double s, std::uint64_t prime_limit) {
  if (!(s > 1.0)) throw DomainError("euler_product: requires s > 1");
  double acc = 0.0;
  for (std::uint32_t p : specfun::primes_up_to(prime_limit)) acc -= std::log1p(-std::pow(static_cast<double>(p), -s));
  return std::exp(acc);
}

DiagCorrelation diag_correlation(double x, std::uint64_t prime_limit) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("diag_correlation: x must lie in (0,1)");
  if (prime_limit < 1000) throw DomainError("diag_correlation: prime_limit must be at least 1000");
  DiagCorrelation d{};
  for (std::uint32_t pi : specfun::primes_up_to(prime_limit)) {
    const double p = pi;
    const double lp = std::log(p);
    // Re log(1 - p^{-1-ix}) = (1/2) log|1 - w|^2
    const double wr = std::cos(x * lp) / p;
    d.first_sum -= 0.25 * std::log1p(-2.0 * wr + 1.0 / (p * p));
    double pn = 1.0 / p;
    for (int n = 2; n < 80; ++n) {
      pn /= p;
      if (pn < 1e-20) break;
      d.second_sum += 0.5 * (1.0 - n) / (double(n) * n) * pn * std::cos(n * x * lp);
    }
    d.second_bound += 0.5 / (p * (p - 1.0));
  }
  d.truncated = d.first_sum + d.second_sum;
  d.closed_form = 0.5 * std::log(std::abs(euler_maclaurin_zeta({1.0, x})));
  d.leading = -0.5 * std::log(x);
  d.converged = 0.5 / static_cast<double>(prime_limit) < 1e-3;
  return d;
}

DiagPlateau diag_plateau(double t) {
  if (!(t > std::exp(1.0))) throw DomainError("diag_plateau: requires t > e");
  const double ll = std::log(std::log(t));
  return {0.5 * ll, 2.0 * ll};
}

}  // namespace logfreeze::zeta
