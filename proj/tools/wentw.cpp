#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "wentw/commands.hpp"
#include "wentw/errors.hpp"

namespace {

/// Flags that would turn data into configuration are refused outright.
int reject_forbidden(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string_view a = argv[i];
    if (a == "--field" || a.starts_with("--field=")) {
      std::cerr << "error: --field is not accepted; the field is declared in the workspace\n";
      return 2;
    }
    if (a == "--seed" || a.starts_with("--seed=")) {
      std::cerr << "error: --seed is not accepted; nothing is randomized\n";
      return 2;
    }
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wentw::DataError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (int rc = reject_forbidden(argc, argv)) return rc;

  CLI::App app{"Checks weak entwining structures and their liftings over finite-dimensional algebras."};
  std::string command, workspace_path, fixture_name, report = "text", pivot = "leftmost";
  std::vector<std::string> names;
  bool timings = false, emit = false, suite = false;
  app.add_option("command", command, "Command to run")
      ->check(CLI::IsMember(wentw::command_names()));
  app.add_option("names", names, "Object names from the workspace (default: all applicable)");
  auto* ws_opt = app.add_option("-w,--workspace", workspace_path, "Workspace JSON file")->check(CLI::ExistingFile);
  app.add_option("-f,--fixture", fixture_name, "Built-in fixture instead of a workspace file")
      ->check(CLI::IsMember(wentw::fixture_names()))
      ->excludes(ws_opt);
  app.add_option("--report", report, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--pivot", pivot, "Splitting pivot preference")->check(CLI::IsMember({"leftmost", "rightmost"}));
  app.add_flag("--timings", timings, "Include wall times in the report");
  app.add_flag("--all", suite, "Run every workspace command on every object");
  app.add_flag("--emit-workspace", emit, "Print the loaded workspace in canonical form and exit");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (command.empty() && !suite && !emit) {
    std::cerr << "error: a command is required (or --all / --emit-workspace)\n" << app.help();
    return 2;
  }
  try {
    wentw::Workspace ws = !workspace_path.empty() ? wentw::parse_workspace(read_file(workspace_path))
                          : !fixture_name.empty() ? wentw::fixture(fixture_name)
                                                  : wentw::Workspace(wentw::Field::rationals());
    if (workspace_path.empty() && fixture_name.empty() && command != "fixtures" && !emit) {
      std::cerr << "error: '" << command << "' needs --workspace or --fixture\n";
      return 2;
    }
    if (emit) {
      std::cout << wentw::render_workspace(ws);
      return 0;
    }
    const auto pref = pivot == "rightmost" ? wentw::PivotPreference::Rightmost : wentw::PivotPreference::Leftmost;
    std::vector<wentw::CommandResult> results;
    if (suite)
      results = wentw::run_suite(ws, pref);
    else
      results.push_back(wentw::run_command(command, ws, {names, pref}));
    std::cout << (report == "json" ? wentw::render_json(results, timings) : wentw::render_text(results, timings));
    bool ok = true;
    for (auto& r : results) ok = ok && r.passed();
    return ok ? 0 : 1;
  } catch (const wentw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
