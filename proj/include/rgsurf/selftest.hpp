#pragma once

#include <string>
#include <vector>

namespace rgs {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// The acceptance criteria against frozen reference values. `only` selects
// criterion ids (empty = all).
std::vector<CriterionResult> run_selftest(const std::vector<int> &only = {}, int threads = 1);

} // namespace rgs
