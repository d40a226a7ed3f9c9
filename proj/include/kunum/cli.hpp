#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kunum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Entry point of the command-line tool; args[0] is the program name.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kunum
