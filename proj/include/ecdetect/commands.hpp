#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ecdetect/problem.hpp"

namespace ecdetect {

/// Command-line overrides. Unset fields fall back to the problem file.
struct CommandOptions {
  std::optional<double> delta;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_degree;
  /// Dual order for `dual` and `hilbert`, degree for `truncate`, `deflate`
  /// and `interpolate`.
  std::optional<int> order;
  std::optional<int> degree;
  /// `interpolate`: restrict to this component.
  std::string component;
  /// `member`: polynomials to test (in addition to the problem's list).
  std::vector<std::string> polynomials;
  bool quiet = false;
};

enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitInconclusive = 2 };

struct CommandResult {
  int exit_code = kExitOk;
  /// Pretty-printed JSON document, newline terminated.
  std::string output;
};

const std::vector<std::string>& command_names();

/// Runs one command. Progress lines go to `log` unless opts.quiet; the JSON
/// output depends only on the problem, the options and the seed.
CommandResult run_command(const std::string& command, const Problem& problem,
                          const CommandOptions& opts, std::ostream* log = nullptr);

/// Same, reading the problem file first; load errors become exit code 1.
CommandResult run_command_file(const std::string& command, const std::string& path,
                               const CommandOptions& opts, std::ostream* log = nullptr);

}  // namespace ecdetect
