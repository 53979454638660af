#pragma once

#include <string>
#include <vector>

namespace logfreeze::selfcheck {

struct CheckResult {
  std::string name;
  bool pass;
  double error;      // worst observed deviation
  double tolerance;
};

struct Options {
  // perturbs one stored Bessel reference value (fault-injection fixture)
  bool corrupt_bessel_constant = false;
};

// Fast invariant suite: special-function recurrences, duality, Euler product
// at s = 2, first zeta zero. Deterministic.
std::vector<CheckResult> run(const Options& opt = {});
bool all_pass(const std::vector<CheckResult>& r);

}  // namespace logfreeze::selfcheck
