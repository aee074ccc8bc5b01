#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfarc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `hfarc` command line (args exclude the program name). Reports go
/// to `out` or to the file named by --out; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfarc
