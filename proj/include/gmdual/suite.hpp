#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gmdual/ring.hpp"

namespace gmdual {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0;
  /// Wall-clock budget in seconds, when the criterion has one.
  std::optional<double> budget;
};

/// The five Cohen-Macaulay rings the suite runs on, by name.
std::vector<std::pair<std::string, RingPtr>> suite_rings();

int suite_size();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_suite();

/// "C04 PASS theorem A on five rings (1.23 s)" plus failing details.
std::string criterion_line(const CriterionResult& r);
nlohmann::ordered_json suite_json(const std::vector<CriterionResult>& results, bool timing);

}  // namespace gmdual
