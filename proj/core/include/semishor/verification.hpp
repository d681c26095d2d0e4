#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semishor::verification {

struct CheckResult {
  std::string name;
  double measured = 0.0;   // error, or the quantity being bounded
  double tolerance = 0.0;  // passes when measured <= tolerance
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// gates, integrals, phasespace, appendixa, appendixb, all
const std::vector<std::string>& verify_suites();
/// shor, integrals, trace, semistate, all
const std::vector<std::string>& oracle_suites();

/// Runs one invariant suite. A tolerance override replaces every check's
/// default tolerance. Throws InvalidArgument for an unknown suite name.
SuiteReport run_verify(std::string_view suite, std::optional<double> tol = std::nullopt);

/// Runs one oracle-agreement suite, as run_verify.
SuiteReport run_oracle(std::string_view suite, std::optional<double> tol = std::nullopt);

}  // namespace semishor::verification
