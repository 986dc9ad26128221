#ifndef ANTIREG_CLI_HPP
#define ANTIREG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace antireg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kPropertyFails = 1;
inline constexpr int kUsage = 2;
inline constexpr int kGuard = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antireg::cli

#endif  // ANTIREG_CLI_HPP
