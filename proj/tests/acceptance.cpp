#include <iostream>

#include "gmdual/suite.hpp"

int main() {
  bool all = true;
  for (int id = 1; id <= gmdual::suite_size(); ++id) {
    gmdual::CriterionResult r = gmdual::run_criterion(id);
    std::cout << gmdual::criterion_line(r) << std::endl;
    all = all && r.pass;
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
