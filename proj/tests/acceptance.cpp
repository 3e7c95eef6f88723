// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <cstdlib>
#include <iostream>
#include <string>

#include "d6spin/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 0;
  bool ok = true;
  for (const auto& r : d6::run_suite(d6::Suite::All, seed)) {
    std::cout << d6::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
