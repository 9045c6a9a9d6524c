#pragma once

#include <string>
#include <vector>

namespace treelang::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs one acceptance criterion (1..13).
CriterionResult run_criterion(int id);

/// Criterion ids in a named suite: "all", "paper-examples", or "oracles".
std::vector<int> suite_criteria(const std::string& suite);

/// Runs a suite in order.
std::vector<CriterionResult> run_suite(const std::string& suite);

/// "[PASS] ..." / "[FAIL] ..." line for one result.
std::string format_result(const CriterionResult& r);

}  // namespace treelang::verify
