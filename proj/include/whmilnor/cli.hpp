#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace whm::cli {

inline constexpr const char* kEngineVersion = "whmilnor 1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 hypothesis violation or failed check, 2 parse or usage error,
/// 3 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace whm::cli
