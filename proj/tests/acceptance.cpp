// Acceptance battery: one line per criterion, nonzero exit if any fails.
#include <cstring>
#include <iomanip>
#include <iostream>

#include "elg/suite.hpp"

int main(int argc, char** argv) {
  elg::SuiteOptions opt;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
  bool all = true;
  for (const auto& r : elg::run_suite(opt)) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s): " << r.detail << "\n";
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
