#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crosscap {

struct SelftestOptions {
  bool quick = false;  // grid bounds reduced tenfold
  /// Test hook: recompute signatures with the Euler correction subtracted
  /// instead of added. Every suite that depends on the convention must fail.
  bool flip_euler_convention = false;
};

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<SuiteResult> run_selftest(const SelftestOptions& options);

/// Prints one line per suite and a summary; returns true iff all passed.
bool report_selftest(const std::vector<SuiteResult>& results, std::ostream& out);

}  // namespace crosscap
