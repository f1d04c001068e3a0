#ifndef MAXCONV_VERIFY_SUITES_HPP
#define MAXCONV_VERIFY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxconv/report.hpp"

namespace maxconv {

// Named property suites runnable in bulk from the CLI and the acceptance
// tests. Each suite draws its own inputs from a seeded generator, runs the
// module-level verifier `trials` times, and keeps the worst error seen.
enum class Suite {
  decomposition,
  composition,
  distributivity,
  power,
  boolean_decomp,
  theorem1,
  prop_projections,
};

struct SuiteReport {
  Suite suite;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  double max_error = 0.0;
  double witness_x = 0.0;
  bool pass = true;
};

// CLI-facing names: decomposition, composition, distributivity, power,
// boolean, theorem1, prop-projections.
const char* suite_name(Suite s);

// Throws std::invalid_argument on an unknown name.
Suite parse_suite(const std::string& name);

// All suites in declaration order.
std::vector<Suite> all_suites();

SuiteReport run_suite(Suite s, int trials, std::uint64_t seed);

std::vector<SuiteReport> run_all_suites(int trials, std::uint64_t seed);

}  // namespace maxconv

#endif  // MAXCONV_VERIFY_SUITES_HPP
