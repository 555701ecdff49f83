#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "manifest.hpp"

namespace scalecalc::cli {

struct CommandResult {
  /// One-line summary printed after the run.
  json summary;
  /// Main CSV artifact, written to `out` or standard output.
  std::optional<std::string> csv;
  /// Structured result, written to `json_out` or embedded in the summary.
  std::optional<json> result;
  /// Secondary sweep table, written to `sweep_csv` when requested.
  std::optional<std::string> sweep_csv;
};

/// Runs one validated manifest. Module failures propagate as scalecalc::Error.
CommandResult run_command(const Manifest& manifest);

/// Full command line: exit 0 on success, 2 on usage or validation errors, 3 on numeric failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scalecalc::cli
