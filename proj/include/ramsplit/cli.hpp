#pragma once

// Command dispatch behind the ramsplit tool, kept free of file and process
// handling so it can be driven from tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsplit/brauer.hpp"

namespace ramsplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIndexTooLarge = 2;
inline constexpr int kExitInvalid = 3;

struct SessionConfig {
  /// validate | classify | index | split | blowup | decompose | gen | export-dot
  std::string command;
  std::uint64_t seed = 0;
  bool even_padding = false;
  /// json | text | dot
  std::string format = "json";
  /// classify: a single location; blowup: the center.
  std::optional<std::string> point;
  GenParams gen;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

/// `inputs` are file contents (model, alpha or bundles). Output is a pure
/// function of the arguments. Exit codes: 0 success, 1 other failure or
/// failed verification, 2 index l^2, 3 schema or validation failure.
RunResult run(const SessionConfig& config, const std::vector<std::string>& inputs);

}  // namespace ramsplit::cli
