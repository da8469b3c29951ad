#pragma once
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "gablade/errors.hpp"

namespace gablade {

// Largest supported algebra dimension. A full multivector then has 2^24
// coefficients, which keeps exhaustive structures desk-scale.
inline constexpr int kMaxDim = 24;

// Multiplicative sign, +1 or -1.
class Sign {
 public:
  constexpr Sign() noexcept = default;  // +1
  static constexpr Sign positive() noexcept { return Sign(false); }
  static constexpr Sign negative() noexcept { return Sign(true); }
  static constexpr Sign from_parity(unsigned swap_count) noexcept {
    return Sign((swap_count & 1u) != 0);
  }

  constexpr int value() const noexcept { return negative_ ? -1 : 1; }
  constexpr double apply(double x) const noexcept { return negative_ ? -x : x; }
  constexpr bool is_negative() const noexcept { return negative_; }

  friend constexpr Sign operator*(Sign a, Sign b) noexcept {
    return Sign(a.negative_ != b.negative_);
  }
  friend constexpr bool operator==(Sign, Sign) noexcept = default;

 private:
  explicit constexpr Sign(bool negative) noexcept : negative_(negative) {}
  bool negative_ = false;
};

// Basis blade of an n-dimensional algebra, identified by an n-bit mask.
// Bit k (counting from bit 0) set means the basis vector e_{k+1} is a
// factor; mask 0 is the scalar blade 1. In the printed word form the
// leftmost written bit is bit 0.
class BladeIndex {
 public:
  BladeIndex(std::uint32_t mask, int dim);  // throws on mask >= 2^dim

  static BladeIndex scalar(int dim) { return BladeIndex(0u, dim); }
  static BladeIndex basis_vector(int k, int dim);  // e_k, 1-based k
  static BladeIndex pseudoscalar(int dim);

  std::uint32_t mask() const noexcept { return mask_; }
  int dim() const noexcept { return dim_; }
  bool is_scalar() const noexcept { return mask_ == 0; }

  friend bool operator==(const BladeIndex&, const BladeIndex&) noexcept = default;

 private:
  std::uint32_t mask_;
  int dim_;
};

// Product of two blades: a sign and the surviving blade.
struct SignedBlade {
  Sign sign;
  BladeIndex blade;

  friend bool operator==(const SignedBlade&, const SignedBlade&) noexcept = default;
};

namespace detail {

// Reordering parity of the blade product a*b on raw masks: for each set bit
// of the right factor at position k, count set bits of the left factor at
// positions strictly above k.
inline bool product_parity(std::uint32_t a, std::uint32_t b) noexcept {
  unsigned swaps = 0;
  while (b != 0) {
    const int k = std::countr_zero(b);
    swaps += static_cast<unsigned>(std::popcount(a >> (k + 1)));
    b &= b - 1;
  }
  return (swaps & 1u) != 0;
}

void require_same_dim(const BladeIndex& a, const BladeIndex& b);

}  // namespace detail

// Number of vector factors (0 for the scalar blade).
inline int grade(BladeIndex a) noexcept {
  return std::popcount(a.mask());
}

// Sign of the product a*b, (-1)^{number of factor transpositions}.
Sign product_sign(BladeIndex a, BladeIndex b);

// Geometric product of two blades: XOR of masks with the transposition sign.
SignedBlade blade_product(BladeIndex a, BladeIndex b);

// Sign a blade acquires under reversion of its factors: (-1)^{g(g-1)/2}.
Sign reversion_sign(BladeIndex a) noexcept;

// Canonical text form: "1" for the scalar blade, else "e{i,j,...}" with
// increasing 1-based indices.
std::string format_blade(BladeIndex b);

// Bit-word form, leftmost written bit first: e_1 in dim 2 -> "10".
std::string mask_bits(BladeIndex b);

// Inverse of mask_bits; the string length gives the dimension.
BladeIndex blade_from_bits(std::string_view bits);

}  // namespace gablade
