#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace spinlab::cli {

inline constexpr std::uint64_t kDefaultSeed = 20240101;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct Streams {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  /// Whether `in` is attached to a terminal; `game play` refuses otherwise
  /// unless an --input script is given.
  bool interactive = false;
};

/// Runs one command line (args exclude the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace spinlab::cli
