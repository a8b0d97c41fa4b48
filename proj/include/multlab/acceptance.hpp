#pragma once

#include <string>
#include <vector>

namespace multlab {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

constexpr int kCriterionCount = 12;

// Runs one acceptance criterion (1..12); exceptions become failures.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace multlab
