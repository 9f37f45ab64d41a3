#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rbax/free_rba.hpp"

namespace rbax {

struct SuiteConfig {
  int trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_n = 3;  // grading bound for enumeration-backed properties
};

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;  // counterexample or summary
};

// Property batteries behind the `check` command. Suites: "words" (product
// and operator laws on bracketed words), "dendriform" (induced splitting
// axioms plus a deliberate negative control), "oracle" (the sequence and
// polynomial models), "trees" (grafting ops, counts, word images). All
// sampling is deterministic in the seed.
std::vector<PropertyResult> run_suite(std::string_view name, const FreeRba& ctx,
                                      const SuiteConfig& cfg);

const std::vector<std::string>& suite_names();

}  // namespace rbax
