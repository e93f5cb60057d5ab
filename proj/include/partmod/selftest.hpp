#pragma once

#include <functional>
#include <string>
#include <vector>

namespace partmod {

struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct SelfCheck {
  int number = 0;
  std::string tag;      // lemma or theorem tags the check pins down
  std::string summary;
  double budget_seconds = 60.0;
  std::function<CheckResult()> run;
};

// The acceptance suite: every entry must pass within its budget.
const std::vector<SelfCheck>& selftest_checks();

}  // namespace partmod
