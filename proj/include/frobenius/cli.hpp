#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace frob::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage to `err`.
/// Exit codes: 0 success or all-pass, 1 verification mismatch, 2 usage or
/// precondition error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frob::cli
