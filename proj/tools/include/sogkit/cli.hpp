#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sogkit {

enum class Status { Ok, Fail, Timeout };

struct CommandOutcome {
  Status status = Status::Ok;
  std::vector<std::string> artifacts;
  std::vector<std::string> diagnostics;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitTimeout = 3;

/// Parses `args` (without the program name), runs the subcommand and
/// returns the process exit code. Documents go to `out` unless --out names a
/// file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sogkit
