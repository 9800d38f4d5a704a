#pragma once

#include <string>
#include <vector>

namespace gepnerkit {

// One row of the verify-all table.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // what was checked / the claimed vs. computed values
};

struct VerifyOptions {
  long precision_bits = 256;
  long terms = 250;
};

// Runs the whole battery of identity checks and certificate replays: the
// eigen equation and monodromy order, the rewrite identity, the worked
// constants, the period identities, both exclusion certificates, and the
// surface/tilt cross-checks. Every row is deterministic.
std::vector<CheckResult> verify_all(const VerifyOptions& options = {});

bool all_pass(const std::vector<CheckResult>& rows);

}  // namespace gepnerkit
