#ifndef EVLOGIC_CLI_HPP
#define EVLOGIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace evlogic::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kIncoherent = 2;
inline constexpr int kCapExceeded = 3;

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evlogic::cli

#endif  // EVLOGIC_CLI_HPP
