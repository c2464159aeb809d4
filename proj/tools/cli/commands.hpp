#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace imbalance::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandInfo {
  std::string_view name;
  std::string_view summary;
  /// Library operations the command exercises.
  std::vector<std::string_view> operations;
};

std::span<const CommandInfo> command_table();

/// Runs one invocation. `args` excludes the program name. Exit codes: 0 ok,
/// 1 invalid sequence / failed check, 2 usage or parse error.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace imbalance::cli
