#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace elg {

struct SuiteOptions {
  bool quick = false;  // sizes n <= 4 only
  std::uint64_t seed = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic summary
  double seconds = 0;   // wall time, kept out of the canonical report body
};

/// The nine acceptance criteria, in order.
std::vector<CriterionResult> run_suite(const SuiteOptions& opt);

}  // namespace elg
