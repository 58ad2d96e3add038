#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidswitch {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Test hook: negate the s entry of beta_2 before running every check.
  bool flip_beta2_sign = false;
  std::vector<double> spot_omegas{0.1, 1.0, 2.0};
};

/// Exact Laurent identities followed by numeric spot checks at each omega.
std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});

/// Prints "PASS name" / "FAIL name (detail)" lines; returns true iff all passed.
bool print_checks(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace braidswitch
