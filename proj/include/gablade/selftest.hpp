#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gablade/blade.hpp"

namespace gablade {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  bool passed = true;
  std::string counterexample;  // first failure, empty when passed
};

using BladeProductFn = std::function<SignedBlade(BladeIndex, BladeIndex)>;

// Compares a blade product against the transposition-counting normal form:
// every pair exhaustively up to max_exhaustive_dim, then random pairs at
// dim 16. Checking a deliberately wrong product (for negative controls) is
// possible through the last parameter; the default is blade_product.
SuiteResult oracle_equivalence_suite(int max_exhaustive_dim,
                                     std::size_t random_pairs,
                                     std::uint64_t seed,
                                     const BladeProductFn& product = {});

// run_dj against a direct truth-table loop, exhaustive over every function
// of up to max_n input bits.
SuiteResult dj_exhaustive_suite(int max_n);

// The suites behind the `selftest` command.
std::vector<SuiteResult> run_selftest();

}  // namespace gablade
