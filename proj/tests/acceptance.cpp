// Runs the twelve reproduction criteria at their stated limits and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <iostream>

#include "maxdiam/repro.hpp"

int main() {
  maxdiam::ReproOptions options;
  int failed = 0;
  maxdiam::run_reproduction(options, [&](const maxdiam::CriterionResult& r) {
    std::cout << maxdiam::summary_line(r) << std::endl;
    if (!r.ok()) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
