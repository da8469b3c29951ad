#include "doctest.h"

#include "gablade/selftest.hpp"

using namespace gablade;

TEST_CASE("the built-in suites pass on a healthy build") {
  const std::vector<SuiteResult> results = run_selftest();
  REQUIRE(results.size() == 2);
  for (const SuiteResult& r : results) {
    CHECK(r.passed);
    CHECK(r.counterexample.empty());
    CHECK(r.checks > 0);
  }
  // dims 1..5 exhaustively plus 10^4 random pairs at dim 16.
  CHECK(results[0].checks == 1364 + 10000);
  // every function of up to 3 input bits.
  CHECK(results[1].checks == 4 + 16 + 256);
}

TEST_CASE("a flipped sign convention is caught with a counterexample") {
  const BladeProductFn flipped = [](BladeIndex a, BladeIndex b) {
    SignedBlade r = blade_product(a, b);
    if (a.mask() != b.mask()) r.sign = r.sign * Sign::negative();
    return r;
  };
  const SuiteResult result = oracle_equivalence_suite(3, 0, 1, flipped);
  CHECK_FALSE(result.passed);
  CHECK_FALSE(result.counterexample.empty());
  CHECK(result.counterexample.find("normal form") != std::string::npos);
}
