#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace og10::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the brute-force node cap.
inline constexpr const char* kBruteNodesEnv = "OG10_MAX_BRUTE_NODES";

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace og10::cli
