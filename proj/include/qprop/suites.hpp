#pragma once

#include <string>
#include <vector>

namespace qprop {

// The verification suites behind `check` and the acceptance runner.  Each
// criterion is a fixed, deterministic family of exact checks; a case is one
// equality (or expected failure) in that family.  A criterion passes when
// every case does.
struct CriterionResult {
  int number = 0;
  std::string title;
  long long passed = 0;
  long long total = 0;

  bool pass() const { return total > 0 && passed == total; }
};

int criterion_count();
CriterionResult run_criterion(int number);  // 1-based; throws on a bad number

// One line per criterion: "CRITERION  4 PASS (3568/3568 cases) title".
std::string criterion_report_line(const CriterionResult& r);

// Suites group the criteria by subject; `all` runs every suite in order.
struct SuiteResult {
  std::string name;
  long long passed = 0;
  long long total = 0;
  bool pass = false;
};

std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& name);  // throws on unknown
SuiteResult run_suite(const std::string& name);

// "SUITE phi PASS (309/309 cases)"
std::string suite_report_line(const SuiteResult& r);

}  // namespace qprop
