#pragma once

#include <string>
#include <vector>

namespace salg {

enum class SuiteSize { Quick, Full };

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 12;

CheckResult run_criterion(int id, SuiteSize size);
std::vector<CheckResult> run_suite(SuiteSize size);

}  // namespace salg
