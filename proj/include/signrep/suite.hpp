#pragma once

#include <functional>
#include <string>
#include <vector>

#include "signrep/serialize.hpp"

namespace signrep {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic summary
  Json data;           // deterministic record of what was computed
  double seconds = 0;  // wall time; never serialized
};

struct SuiteOptions {
  std::vector<int> ids;  // empty = all of 1..15
  // called after each criterion finishes
  std::function<void(const CriterionResult&)> on_result;
};

int acceptance_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const SuiteOptions& opt = {});
// Report without timings, so two runs can be compared byte for byte.
Json acceptance_report(const std::vector<CriterionResult>& results);

}  // namespace signrep
