#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace logfreeze {

// Inverse two-sided Laplace / Mellin integral along Re s = s0:
//   f(u) = (1/2 pi i) int e^{s u} F(s) ds.
// F must satisfy F(conj s) = conj F(s). F is sampled once on an equispaced
// grid in Im s (trapezoidal rule, exponentially accurate inside the strip of
// analyticity) and reused for every u. The grid is extended until |F| drops
// below decay_tol relative to its largest sample.
class VerticalLine {
 public:
  using Fn = std::function<std::complex<double>(std::complex<double>)>;

  VerticalLine(const Fn& log_f, double s0, double h, double decay_tol = 1e-16, double omega_max = 400.0);

  double operator()(double u) const;

  double s0() const { return s0_; }
  double omega() const { return h_ * static_cast<double>(values_.size() - 1); }

 private:
  double s0_;
  double h_;
  std::vector<std::complex<double>> values_;  // F(s0 + i k h), k = 0, 1, ...
};

}  // namespace logfreeze
