#pragma once

#include <stdexcept>
#include <string>

namespace logfreeze {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a pole (or at a zero where a logarithm is requested).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Iterative scheme or quadrature that did not meet its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user configuration (unknown keys, out-of-range sizes, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure in linear algebra (e.g. Cholesky of a non-PD matrix).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace logfreeze
