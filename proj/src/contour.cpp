#include "logfreeze/contour.hpp"

#include <cmath>
#include <string>

#include "logfreeze/error.hpp"

namespace logfreeze {

VerticalLine::VerticalLine(const Fn& log_f, double s0, double h, double decay_tol, double omega_max)
    : s0_(s0), h_(h) {
  // Work with log F to survive the wide dynamic range, then scale once.
  std::vector<std::complex<double>> logs;
  double peak = -INFINITY;
  int quiet = 0;
  for (int k = 0;; ++k) {
    const double w = k * h;
    if (w > omega_max) {
      throw ConvergenceError("VerticalLine: integrand did not decay below tolerance by |Im s| = " +
                             std::to_string(omega_max));
    }
    const auto lf = log_f({s0, w});
    logs.push_back(lf);
    peak = std::max(peak, lf.real());
    if (lf.real() < peak + std::log(decay_tol)) {
      if (++quiet >= 8) break;
    } else {
      quiet = 0;
    }
  }
  values_.reserve(logs.size());
  for (const auto& lf : logs) values_.push_back(std::exp(lf));
}

double VerticalLine::operator()(double u) const {
  // (1/2pi) int e^{(s0 + i w) u} F dw, symmetric in w
  double sum = 0.5 * values_[0].real();
  const std::complex<double> step = std::exp(std::complex<double>(0.0, h_ * u));
  std::complex<double> phase = step;
  for (std::size_t k = 1; k < values_.size(); ++k) {
    sum += (phase * values_[k]).real();
    if (k % 64 == 0) {
      phase = std::exp(std::complex<double>(0.0, h_ * u * static_cast<double>(k + 1)));
    } else {
      phase *= step;
    }
  }
  return std::exp(s0_ * u) * h_ * sum / M_PI;
}

}  // namespace logfreeze
