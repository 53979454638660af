#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace logfreeze::specfun {

using cplx = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kLog2Pi = 1.83787706640934548356;
// zeta'(-1) = 1/12 - log(Glaisher's constant)
inline constexpr double kZetaPrimeMinus1 = -0.16542114370045092921;

// log Gamma continued analytically from the positive axis; exp() of the
// result is Gamma(z). Throws PoleError at nonpositive integers.
cplx log_gamma(cplx z);
double log_gamma(double x);  // x > 0

// 1/Gamma(x) for real x, zero at the poles.
double rgamma(double x);

cplx digamma(cplx z);
double digamma(double x);

// digamma(x) / Gamma(x), finite at the poles of Gamma.
double digamma_over_gamma(double x);

// log of the Barnes G-function. Throws PoleError at the zeros z = 0, -1, ...
cplx log_barnes_g(cplx z);
double log_barnes_g(double x);  // x > 0

// log G_x(z) for the double gamma function with periods x and 1/x,
// normalised so that G_1 = G. No poles; zeros at z = -n x - m/x.
cplx log_double_gamma(cplx z, double x);
double log_double_gamma(double z, double x);

// Modified Bessel function of the second kind, orders 0 and 1.
double bessel_k(int nu, double u);

// All primes p <= limit (segmented sieve), limit <= 2^31.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

}  // namespace logfreeze::specfun
