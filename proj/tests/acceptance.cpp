// One PASS/FAIL line per criterion on stdout; timings on stderr.
#include <cstdio>
#include <iostream>

#include "kzl/acceptance.hpp"

int main() {
  using namespace kzl::acceptance;
  int failed = 0;
  for (int id = 1; id <= criterion_count(); ++id) {
    CriterionResult r = run_criterion(id);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " -- " << r.detail
              << std::endl;
    std::fprintf(stderr, "criterion %d: %.3f s (limit %.0f s)\n", r.id, r.seconds, r.limit);
    failed += !r.pass;
  }
  return failed ? 1 : 0;
}
