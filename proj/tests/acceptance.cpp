// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <iostream>

#include "signrep/suite.hpp"

int main() {
  signrep::SuiteOptions opt;
  opt.on_result = [](const signrep::CriterionResult& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.detail
              << " [" << r.seconds << " s]" << std::endl;
  };
  bool all = true;
  for (const auto& r : signrep::run_acceptance(opt)) all = all && r.pass;
  return all ? 0 : 1;
}
