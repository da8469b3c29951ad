#pragma once
#include <random>

#include "gablade/canonical.hpp"
#include "gablade/multivector.hpp"

namespace gablade::testing {

// Blade product through the factor-word normal form; independent of the
// parity formula in blade_product.
inline SignedBlade oracle_product(BladeIndex a, BladeIndex b) {
  FactorSequence word = factors_of(a);
  const FactorSequence rhs = factors_of(b);
  word.factors.insert(word.factors.end(), rhs.factors.begin(),
                      rhs.factors.end());
  return canonicalize(word);
}

// Term-by-term geometric product through oracle_product.
inline Multivector oracle_gp(const Multivector& x, const Multivector& y) {
  Multivector out(x.dim());
  for (const auto& [a, ca] : x.term_list()) {
    for (const auto& [b, cb] : y.term_list()) {
      const SignedBlade r = oracle_product(a, b);
      out += Multivector::from_blade(r.blade, r.sign.apply(ca * cb));
    }
  }
  return out;
}

inline Multivector random_integer_mv(std::mt19937_64& rng, int dim,
                                     int max_terms, int coeff_range) {
  Multivector out(dim);
  const int terms = static_cast<int>(rng() % (max_terms + 1));
  for (int i = 0; i < terms; ++i) {
    const std::uint32_t mask =
        static_cast<std::uint32_t>(rng() % (std::uint64_t{1} << dim));
    const int c =
        static_cast<int>(rng() % (2 * coeff_range + 1)) - coeff_range;
    out += Multivector::from_blade(BladeIndex(mask, dim), c);
  }
  return out;
}

}  // namespace gablade::testing
