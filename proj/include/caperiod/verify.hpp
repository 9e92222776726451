#pragma once

// Acceptance criteria with frozen reference values. Shared by `ca_periods verify`
// and the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace caperiod {

enum class Suite { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, Suite suite, unsigned threads = 0);

// Runs criteria 1..8 in order, reporting each as soon as it finishes.
std::vector<CriterionResult> run_criteria(Suite suite, unsigned threads = 0,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& result);

}  // namespace caperiod
