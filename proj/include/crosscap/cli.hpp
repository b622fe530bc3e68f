#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace crosscap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the crosscap command line. `args` excludes the program name. Data
/// goes to `out`, diagnostics to `err`; never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crosscap
