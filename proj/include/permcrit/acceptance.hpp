#pragma once

// End-to-end checks of the library's quantitative claims. Shared by the
// acceptance test binary and `permcrit selftest`.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace permcrit {

struct AcceptanceResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
};

struct AcceptanceCheck {
  int id;
  std::string name;
  std::function<AcceptanceResult()> run;
};

std::vector<AcceptanceCheck> acceptance_checks();

/// Runs every check, printing one "PASS"/"FAIL" line each to `out`.
/// Returns true when all pass.
bool run_acceptance(std::ostream &out);

} // namespace permcrit
