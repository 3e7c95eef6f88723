// The acceptance checks, runnable from the CLI and the acceptance binary.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace d6 {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

CheckResult check_enumeration();
CheckResult check_crystal_axioms();
CheckResult check_string_lengths();
CheckResult check_condition_uniqueness(std::uint64_t seed);
CheckResult check_minimal_elements();
CheckResult check_coherent_family();
CheckResult check_isomorphism(std::uint64_t seed);
CheckResult check_tropical_axioms(std::uint64_t seed);
CheckResult check_f0_cross(std::uint64_t seed);
CheckResult check_expression_engine(std::uint64_t seed);

enum class Suite { Crystal, Coherent, Ud, Iso, All };

// Throws std::invalid_argument for an unknown name.
Suite parse_suite(const std::string& name);

// Results ordered by criterion id.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed = 0);

// "PASS  3 string lengths (0.41 s)" followed by the detail on failure.
std::string format_result(const CheckResult& r);

}  // namespace d6
