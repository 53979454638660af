#include "logfreeze/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "logfreeze/error.hpp"

namespace logfreeze::specfun {
namespace {

constexpr cplx kI{0.0, 1.0};

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log sin(pi z) for Im z >= 0, free of overflow for large |Im z|.
cplx log_sin_pi_upper(cplx z) {
  if (z.imag() > 1.0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i), |e^{2 i pi z}| < e^{-2 pi}
    return -kI * kPi * z + std::log(std::exp(2.0 * kI * kPi * z) - 1.0) - std::log(2.0 * kI);
  }
  // Reduce the real part so sin is evaluated near the origin.
  const double n = std::round(z.real());
  const cplx w{z.real() - n, z.imag()};
  cplx s = std::sin(kPi * w);
  if (std::fmod(std::fabs(n), 2.0) == 1.0) s = -s;
  return std::log(s);
}

cplx stirling_log_gamma(cplx z) {
  cplx sum = 0.0;
  const cplx z2 = 1.0 / (z * z);
  cplx zp = 1.0 / z;
  for (int k = 1; k <= 10; ++k) {
    sum += boost::math::bernoulli_b2n<double>(k) / (2.0 * k * (2.0 * k - 1.0)) * zp;
    zp *= z2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi + sum;
}

cplx log_gamma_upper(cplx z) {
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi_upper(z) - std::conj(log_gamma_upper(std::conj(1.0 - z)));
  }
  cplx prod = 1.0;
  bool shifted = false;
  while (std::abs(z) < 15.0) {
    prod *= z;
    z += 1.0;
    shifted = true;
  }
  cplx r = stirling_log_gamma(z);
  if (shifted) r -= std::log(prod);
  return r;
}

cplx digamma_upper(cplx z) {
  if (z.real() < 0.5) {
    // psi(z) = psi(1-z) - pi cot(pi z)
    cplx cot;
    if (z.imag() > 1.0) {
      const cplx w = std::exp(2.0 * kI * kPi * z);
      cot = kI * (w + 1.0) / (w - 1.0);
    } else {
      cot = std::cos(kPi * z) / std::sin(kPi * z);
    }
    return std::conj(digamma_upper(std::conj(1.0 - z))) - kPi * cot;
  }
  cplx acc = 0.0;
  while (std::abs(z) < 15.0) {
    acc += 1.0 / z;
    z += 1.0;
  }
  cplx sum = 0.0;
  const cplx z2 = 1.0 / (z * z);
  cplx zp = z2;
  for (int k = 1; k <= 10; ++k) {
    sum += boost::math::bernoulli_b2n<double>(k) / (2.0 * k) * zp;
    zp *= z2;
  }
  return std::log(z) - 0.5 / z - sum - acc;
}

// log G(w + 1) for large |w|.
cplx barnes_asymptotic(cplx w) {
  const cplx lw = std::log(w);
  const cplx w2 = w * w;
  cplx sum = 0.0;
  const cplx iw2 = 1.0 / w2;
  cplx p = iw2;
  for (int k = 1; k <= 12; ++k) {
    sum += boost::math::bernoulli_b2n<double>(k + 1) / (4.0 * k * (k + 1.0)) * p;
    p *= iw2;
  }
  return 0.5 * w2 * lw - 0.75 * w2 + 0.5 * w * kLog2Pi - lw / 12.0 + kZetaPrimeMinus1 + sum;
}

cplx log_barnes_g_upper(cplx z) {
  cplx acc = 0.0;
  while (z.real() < 12.0) {
    acc += log_gamma_upper(z);
    z += 1.0;
  }
  return barnes_asymptotic(z - 1.0) - acc;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.imag() < 0.0) return std::conj(log_gamma_upper(std::conj(z)));
  return log_gamma_upper(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: real argument must be positive");
  return boost::math::lgamma(x);
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  if (x > 171.0) return 0.0;
  return 1.0 / boost::math::tgamma(x);
}

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole");
  if (z.imag() == 0.0) return boost::math::digamma(z.real());
  if (z.imag() < 0.0) return std::conj(digamma_upper(std::conj(z)));
  return digamma_upper(z);
}

double digamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) throw PoleError("digamma: pole");
  return boost::math::digamma(x);
}

double digamma_over_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) {
    // psi(-j + e)/Gamma(-j + e) -> (-1)^(j+1) j!
    const int j = static_cast<int>(-x);
    const double f = boost::math::factorial<double>(static_cast<unsigned>(j));
    return (j % 2 == 0) ? -f : f;
  }
  return boost::math::digamma(x) * rgamma(x);
}

cplx log_barnes_g(cplx z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_barnes_g: G vanishes at z = " + std::to_string(z.real()));
  }
  if (z.imag() < 0.0) return std::conj(log_barnes_g_upper(std::conj(z)));
  return log_barnes_g_upper(z);
}

double log_barnes_g(double x) {
  if (!(x > 0.0)) throw DomainError("log_barnes_g: real argument must be positive");
  return log_barnes_g_upper(cplx{x, 0.0}).real();
}

double log_double_gamma(double z, double x) { return log_double_gamma(cplx{z, 0.0}, x).real(); }

double bessel_k(int nu, double u) {
  if (nu != 0 && nu != 1) throw DomainError("bessel_k: order must be 0 or 1");
  if (!(u > 0.0)) throw DomainError("bessel_k: argument must be positive");
  return boost::math::cyl_bessel_k(nu, u);
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  if (limit > (std::uint64_t{1} << 31)) throw DomainError("primes_up_to: limit exceeds 2^31");
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;

  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint32_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    const std::uint64_t hi = std::min(lo + kSegment - 1, limit);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint32_t p : base) {
      const std::uint64_t pp = std::uint64_t{p} * p;
      if (pp > hi) break;
      std::uint64_t start = std::max(pp, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t i = lo; i <= hi; ++i) {
      if (seg[i - lo]) out.push_back(static_cast<std::uint32_t>(i));
    }
  }
  return out;
}

}  // namespace logfreeze::specfun
