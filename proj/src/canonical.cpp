#include "gablade/canonical.hpp"

#include <sstream>
#include <utility>

namespace gablade {

namespace {

unsigned bubble_sort_counting_swaps(std::vector<int>& word,
                                    SwapSchedule schedule) {
  unsigned swaps = 0;
  if (word.size() < 2) return swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    if (schedule == SwapSchedule::left_to_right) {
      for (std::size_t j = 0; j + 1 < word.size(); ++j) {
        if (word[j] > word[j + 1]) {
          std::swap(word[j], word[j + 1]);
          ++swaps;
          moved = true;
        }
      }
    } else {
      for (std::size_t j = word.size() - 1; j-- > 0;) {
        if (word[j] > word[j + 1]) {
          std::swap(word[j], word[j + 1]);
          ++swaps;
          moved = true;
        }
      }
    }
  }
  return swaps;
}

}  // namespace

SignedBlade canonicalize(const FactorSequence& s, SwapSchedule schedule) {
  if (s.dim < 1 || s.dim > kMaxDim) {
    std::ostringstream os;
    os << "algebra dimension must be in [1, " << kMaxDim << "], got " << s.dim;
    throw DimensionError(os.str());
  }
  for (int idx : s.factors) {
    if (idx < 1 || idx > s.dim) {
      std::ostringstream os;
      os << "factor index " << idx << " outside [1, " << s.dim << "]";
      throw ValueError(os.str());
    }
  }

  std::vector<int> word = s.factors;
  const unsigned swaps = bubble_sort_counting_swaps(word, schedule);

  // Sorted word: equal factors sit adjacent, e_k e_k = 1 deletes the pair.
  std::vector<int> surviving;
  surviving.reserve(word.size());
  for (int idx : word) {
    if (!surviving.empty() && surviving.back() == idx) {
      surviving.pop_back();
    } else {
      surviving.push_back(idx);
    }
  }

  std::uint32_t mask = 0;
  for (int idx : surviving) mask |= std::uint32_t{1} << (idx - 1);
  return SignedBlade{Sign::from_parity(swaps), BladeIndex(mask, s.dim)};
}

FactorSequence factors_of(BladeIndex b) {
  FactorSequence s;
  s.dim = b.dim();
  for (int k = 0; k < b.dim(); ++k) {
    if ((b.mask() >> k) & 1u) s.factors.push_back(k + 1);
  }
  return s;
}

}  // namespace gablade
