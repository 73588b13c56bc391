#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultMaxN = 6;

/// Environment variable naming the table cache directory.
inline constexpr const char* kCacheEnv = "HECKE_CACHE_DIR";

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
