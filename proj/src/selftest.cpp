#include "gablade/selftest.hpp"

#include <random>
#include <sstream>

#include "gablade/canonical.hpp"
#include "gablade/dj.hpp"

namespace gablade {

namespace {

// Reference product via the factor-word normal form.
SignedBlade product_by_canonicalization(BladeIndex a, BladeIndex b) {
  FactorSequence word = factors_of(a);
  const FactorSequence rhs = factors_of(b);
  word.factors.insert(word.factors.end(), rhs.factors.begin(),
                      rhs.factors.end());
  return canonicalize(word);
}

bool check_pair(const BladeProductFn& product, BladeIndex a, BladeIndex b,
                std::string& counterexample) {
  const SignedBlade got = product ? product(a, b) : blade_product(a, b);
  const SignedBlade want = product_by_canonicalization(a, b);
  if (got == want) return true;
  std::ostringstream os;
  os << "product " << format_blade(a) << " * " << format_blade(b) << " (dim "
     << a.dim() << "): got " << (got.sign.value() > 0 ? "+" : "-")
     << format_blade(got.blade) << ", normal form says "
     << (want.sign.value() > 0 ? "+" : "-") << format_blade(want.blade);
  counterexample = os.str();
  return false;
}

}  // namespace

SuiteResult oracle_equivalence_suite(int max_exhaustive_dim,
                                     std::size_t random_pairs,
                                     std::uint64_t seed,
                                     const BladeProductFn& product) {
  SuiteResult result;
  result.name = "blade-product-vs-normal-form";
  for (int dim = 1; dim <= max_exhaustive_dim && result.passed; ++dim) {
    const std::uint32_t full = std::uint32_t{1} << dim;
    for (std::uint32_t a = 0; a < full && result.passed; ++a) {
      for (std::uint32_t b = 0; b < full; ++b) {
        ++result.checks;
        if (!check_pair(product, BladeIndex(a, dim), BladeIndex(b, dim),
                        result.counterexample)) {
          result.passed = false;
          break;
        }
      }
    }
  }

  constexpr int kRandomDim = 16;
  std::mt19937_64 rng(seed);
  const std::uint32_t full = std::uint32_t{1} << kRandomDim;
  for (std::size_t i = 0; i < random_pairs && result.passed; ++i) {
    const std::uint32_t a = static_cast<std::uint32_t>(rng() % full);
    const std::uint32_t b = static_cast<std::uint32_t>(rng() % full);
    ++result.checks;
    if (!check_pair(product, BladeIndex(a, kRandomDim),
                    BladeIndex(b, kRandomDim), result.counterexample)) {
      result.passed = false;
    }
  }
  return result;
}

SuiteResult dj_exhaustive_suite(int max_n) {
  SuiteResult result;
  result.name = "dj-exhaustive";
  for (int n = 1; n <= max_n && result.passed; ++n) {
    const std::size_t size = std::size_t{1} << n;
    const std::uint64_t function_count = std::uint64_t{1} << size;
    for (std::uint64_t code = 0; code < function_count; ++code) {
      std::vector<bool> table(size);
      long long expected = 0;
      for (std::size_t a = 0; a < size; ++a) {
        table[a] = ((code >> a) & 1u) != 0;
        expected += table[a] ? -1 : 1;
      }
      const BooleanFunction f(n, table);
      const DJOutcome outcome = run_dj(f);
      ++result.checks;

      const bool witness_ok = outcome.scalar_witness == expected;
      const bool constant_ok =
          (outcome.classification == DJClassification::constant) ==
          f.is_constant();
      const bool balanced_ok =
          (outcome.classification == DJClassification::balanced) ==
          f.is_balanced();
      if (!witness_ok || !constant_ok || !balanced_ok) {
        result.passed = false;
        std::ostringstream os;
        os << "f = " << f.table_string() << " (n = " << n << "): witness "
           << outcome.scalar_witness << ", expected " << expected
           << ", classified " << to_string(outcome.classification);
        result.counterexample = os.str();
        break;
      }
    }
  }
  return result;
}

std::vector<SuiteResult> run_selftest() {
  std::vector<SuiteResult> results;
  results.push_back(oracle_equivalence_suite(5, 10000, 0x5eedbea7u));
  results.push_back(dj_exhaustive_suite(3));
  return results;
}

}  // namespace gablade
