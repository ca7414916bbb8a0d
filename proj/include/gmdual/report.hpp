#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gmdual/module.hpp"
#include "gmdual/serre.hpp"
#include "gmdual/session.hpp"

namespace gmdual {

struct ReportOptions {
  Window window{-20, 20};
  int t_max = 16;
  /// Wall-clock seconds per block; off by default so reports are reproducible.
  bool timing = false;
  /// Run commands concurrently (the environment is read-only by then).
  bool concurrent = false;
};

struct NamedTable {
  std::string name;
  HilbertTable table;
};

struct Verdict {
  std::string label;
  bool pass = false;
};

/// Result of one command.
struct Block {
  std::string command;
  SourceLoc loc;
  std::string verb;
  std::vector<NamedTable> tables;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::vector<Verdict> verdicts;
  std::vector<VerificationReport> reports;
  /// degree -> stage, for outputs read off a colimit
  std::vector<std::pair<std::string, StabilizationCertificate>> stages;
  std::optional<std::string> error;
  int exit_class = 0;
  double seconds = 0;

  bool passed() const;
};

struct Report {
  std::string source;
  ReportOptions options;
  std::vector<Block> blocks;
};

Block run_command(const Command& cmd, const Environment& env, const ReportOptions& opts);
Report run_session(const SessionAST& ast, const Environment& env, const ReportOptions& opts, std::string source = "");

nlohmann::ordered_json table_json(const HilbertTable& t);
nlohmann::ordered_json report_json(const VerificationReport& r);
nlohmann::ordered_json block_json(const Block& b, bool timing);

std::string emit_json(const Report& r);
std::string emit_table(const Report& r);

/// 0 when every verdict passes, 1 on a failed verdict, 3 when a colimit did
/// not stabilize; stabilization failures win over verification failures.
int exit_code(const Report& r);

}  // namespace gmdual
