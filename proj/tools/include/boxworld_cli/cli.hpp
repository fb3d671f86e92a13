#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace boxworld::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  ///< library or I/O error
inline constexpr int kExitUsage = 2;   ///< bad flags, usage text on stderr

/// Runs one command line (program name excluded). Results go to `out` unless a
/// subcommand writes files, in which case a manifest is written beside them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Environment variable naming the vertex-set cache directory.
inline constexpr const char* kCacheEnv = "BOXWORLD_CACHE_DIR";

}  // namespace boxworld::cli
