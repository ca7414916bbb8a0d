#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gmdual/error.hpp"
#include "gmdual/report.hpp"
#include "gmdual/session.hpp"
#include "gmdual/suite.hpp"

using namespace gmdual;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_session_file(const std::string& path, const std::string& format, const std::string& window, int t_max,
                     bool timing, bool concurrent) {
  ReportOptions opts;
  opts.t_max = t_max;
  opts.timing = timing;
  opts.concurrent = concurrent;
  try {
    opts.window = parse_window(window);
  } catch (const ComputationError& e) {
    std::cerr << "--window: " << e.what() << "\n";
    return 2;
  }
  if (t_max < 1) {
    std::cerr << "--tmax must be positive\n";
    return 2;
  }
  std::string text;
  SessionAST ast;
  Environment env;
  try {
    text = read_file(path);
    ast = parse_session(text);
    env = build_environment(ast);
  } catch (const SessionError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  Report report = run_session(ast, env, opts, path);
  std::cout << (format == "json" ? emit_json(report) : emit_table(report));
  return exit_code(report);
}

int run_suite_cli(const std::string& suite, const std::string& format, int only, bool timing) {
  if (suite != "paper") {
    std::cerr << "unknown suite '" << suite << "'\n";
    return 2;
  }
  std::vector<CriterionResult> results;
  if (only > 0) {
    if (only > suite_size()) {
      std::cerr << "no criterion " << only << "\n";
      return 2;
    }
    results.push_back(run_criterion(only));
  } else {
    for (int id = 1; id <= suite_size(); ++id) {
      results.push_back(run_criterion(id));
      if (format == "table") std::cout << criterion_line(results.back()) << std::endl;
    }
  }
  if (format == "json") {
    std::cout << suite_json(results, timing).dump(2) << "\n";
  } else if (only > 0) {
    std::cout << criterion_line(results.back()) << "\n";
  }
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graded local duality and Serre functor computations"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string window = "-20..20";
  int t_max = 16;
  bool timing = false, concurrent = false, seed_free = false;
  std::string session_path;

  auto* run = app.add_subcommand("run", "Run a session file and print a report");
  run->add_option("session", session_path, "Session file")->required();
  run->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  run->add_option("--window", window, "Default degree window a..b");
  run->add_option("--tmax", t_max, "Default colimit stage cap");
  run->add_flag("--timing", timing, "Add wall-clock seconds to each block");
  run->add_flag("--concurrent", concurrent, "Run commands concurrently");
  run->add_flag("--seed-free", seed_free, "Accepted for compatibility; every computation is deterministic");

  std::string suite = "paper";
  int only = 0;
  auto* verify = app.add_subcommand("verify", "Run the built-in acceptance suite");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--criterion", only, "Run a single criterion by number");
  verify->add_flag("--timing", timing, "Include seconds in JSON output");

  auto* fmt = app.add_subcommand("fmt", "Print a session file in canonical form");
  fmt->add_option("session", session_path, "Session file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (*run) return run_session_file(session_path, format, window, t_max, timing, concurrent);
  if (*verify) return run_suite_cli(suite, format, only, timing);
  try {
    std::cout << print_session(parse_session(read_file(session_path)));
  } catch (const SessionError& e) {
    std::cerr << session_path << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
