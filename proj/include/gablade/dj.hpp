#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gablade/multivector.hpp"

namespace gablade {

// run_dj touches multivectors with 2^{n+1} terms; 16 input bits keeps the
// whole pipeline desk-scale.
inline constexpr int kMaxInputBits = 16;

// Explicit truth table of f: {0,1}^n -> {0,1}. Entry at index A equals
// f(A_1...A_n) with A read most-significant-bit first (A_1 is the MSB).
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<bool> table);

  static BooleanFunction constant(int n, int value);
  static BooleanFunction parity(int n);      // balanced: f = A_1 xor ... xor A_n
  static BooleanFunction top_half(int n);    // balanced: f = A_1
  static BooleanFunction random_balanced(int n, std::uint64_t seed);

  // "0110...", or one of: constant0, constant1, balanced:parity,
  // balanced:tophalf, balanced:random?seed=<u64>.
  static BooleanFunction from_spec(int n, std::string_view spec);

  int n() const noexcept { return n_; }
  std::size_t table_size() const noexcept { return table_.size(); }
  bool value_at_index(std::uint32_t index) const;

  // f applied to the first n written bits of a blade mask (bit k of the
  // mask is A_{k+1}).
  bool value_on_mask(std::uint32_t machine_mask) const noexcept;

  std::size_t ones_count() const noexcept;
  bool is_constant() const noexcept;
  bool is_balanced() const noexcept;
  std::string table_string() const;

 private:
  int n_;
  std::vector<bool> table_;
};

enum class DJClassification { constant, balanced, promise_violated };

std::string to_string(DJClassification c);

// Readout of the pipeline: the coefficient the scalar projection extracts
// (equal to sum over A of (-1)^{f(A)}) and its classification.
struct DJOutcome {
  long long scalar_witness = 0;
  DJClassification classification = DJClassification::promise_violated;
  std::optional<int> constant_value;  // f(0...0), set iff constant
};

// Sum of all 2^m blades of the m-dimensional algebra, coefficient +1.
Multivector build_E(int m);  // 1 <= m <= kMaxInputBits + 1

// The probe vector e_{m-1}, i.e. the blade written 0...010 (the set bit is
// the second-to-last written position).
BladeIndex probe_blade(int m);  // m >= 2

// build_E(m) times the probe blade; every blade ends up with coefficient
// (-1)^{last written bit}.
Multivector first_step(int m);

// Per-blade right multiplication by the last basis vector wherever
// f(first n written bits) = 1; the identity elsewhere.
Multivector apply_oracle(const BooleanFunction& f, const Multivector& x);

// Sum of the reversed blades whose last written bit is 0.
Multivector build_F(int m);

DJOutcome classify_witness(long long witness, int n);

// Scalar part of build_F * apply_oracle(f, first_step), classified.
DJOutcome run_dj(const BooleanFunction& f);

// Same pipeline, keeping the intermediate bags (listed in pipeline order).
struct DJStages {
  Multivector after_first_step;
  Multivector after_oracle;
  Multivector final_bag;
  DJOutcome outcome;
};

DJStages run_dj_stages(const BooleanFunction& f);

}  // namespace gablade
