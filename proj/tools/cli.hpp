// Command-line front end.  run_cli is the whole program minus process setup,
// so tests can drive it in-process.
#ifndef ASEP2_TOOLS_CLI_HPP
#define ASEP2_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace asep2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kAlgebraCap = 5;
inline constexpr int kSymmetryCap = 6;
inline constexpr int kMeasureCap = 6;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asep2::cli

#endif  // ASEP2_TOOLS_CLI_HPP
