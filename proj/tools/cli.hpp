#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tworat::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // negative verdict, or failed checks for verify
inline constexpr int kExitError = 2;

// Runs the tool on args (without the program name). Data goes to out unless
// --output is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tworat::cli
