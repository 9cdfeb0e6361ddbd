// Prints one PASS/FAIL line per acceptance criterion and exits nonzero
// when any of them fails.

#include <iostream>

#include "lqel/pipeline.hpp"

int main() {
  const bool ok = lqel::run_acceptance(5, std::cout);
  std::cout << (ok ? "acceptance: all criteria passed"
                   : "acceptance: FAILURES above")
            << std::endl;
  return ok ? 0 : 1;
}
