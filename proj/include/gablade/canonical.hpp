#pragma once
#include <vector>

#include "gablade/blade.hpp"

namespace gablade {

// A word of basis-vector factors e_{i_1} e_{i_2} ... e_{i_m}, indices
// 1-based, repetitions allowed.
struct FactorSequence {
  std::vector<int> factors;
  int dim = 0;
};

enum class SwapSchedule { left_to_right, right_to_left };

// Brute-force normal form of a factor word: bubble-sorts the word by
// adjacent transpositions, flipping the sign once per swap of distinct
// indices, then cancels adjacent equal pairs without a sign change.
//
// Deliberately shares no code with product_sign's parity formula; this is
// the reference the bitmask kernel is validated against.
SignedBlade canonicalize(const FactorSequence& s,
                         SwapSchedule schedule = SwapSchedule::left_to_right);

// Factor word of a blade, indices increasing.
FactorSequence factors_of(BladeIndex b);

}  // namespace gablade
