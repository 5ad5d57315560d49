#pragma once

#include <string>
#include <vector>

#include "wentw/workspace.hpp"

namespace wentw {

struct CommandOptions {
  /// Object names from the workspace; empty means every applicable object.
  std::vector<std::string> names;
  PivotPreference pivot = PivotPreference::Leftmost;
};

/// Reports in command order; never depends on evaluation order.
struct CommandResult {
  std::string command;
  std::vector<Report> reports;

  bool passed() const;
};

std::vector<std::string> command_names();

/// Dispatches one command. Throws DataError for unknown commands or names;
/// structural failures are reported, not thrown.
CommandResult run_command(const std::string& command, const Workspace& ws, const CommandOptions& opts = {});

/// Every command on every object of the workspace, in command_names() order.
std::vector<CommandResult> run_suite(const Workspace& ws, PivotPreference pivot = PivotPreference::Leftmost);

/// Machine-readable report. Wall times are included only on request so that
/// the default output is byte-identical across runs.
std::string render_json(const std::vector<CommandResult>& results, bool timings = false);
/// Human-readable report with the same verdicts.
std::string render_text(const std::vector<CommandResult>& results, bool timings = false);

}  // namespace wentw
