#include "gablade/dj.hpp"

#include <charconv>
#include <random>
#include <sstream>

namespace gablade {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxInputBits) {
    std::ostringstream os;
    os << "input bit count must be in [1, " << kMaxInputBits << "], got " << n;
    throw ValueError(os.str());
  }
}

void check_m(int m, int lower) {
  if (m < lower || m > kMaxInputBits + 1) {
    std::ostringstream os;
    os << "algebra dimension must be in [" << lower << ", "
       << kMaxInputBits + 1 << "], got " << m;
    throw DimensionError(os.str());
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<bool> table)
    : n_(n), table_(std::move(table)) {
  check_n(n);
  if (table_.size() != (std::size_t{1} << n)) {
    std::ostringstream os;
    os << "truth table for " << n << " bits must have " << (1u << n)
       << " entries, got " << table_.size();
    throw ValueError(os.str());
  }
}

BooleanFunction BooleanFunction::constant(int n, int value) {
  check_n(n);
  if (value != 0 && value != 1) throw ValueError("constant value must be 0 or 1");
  return BooleanFunction(n, std::vector<bool>(std::size_t{1} << n, value == 1));
}

BooleanFunction BooleanFunction::parity(int n) {
  check_n(n);
  std::vector<bool> table(std::size_t{1} << n);
  for (std::uint32_t a = 0; a < table.size(); ++a) {
    table[a] = (std::popcount(a) & 1) != 0;
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction BooleanFunction::top_half(int n) {
  check_n(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> table(size, false);
  for (std::size_t a = size / 2; a < size; ++a) table[a] = true;
  return BooleanFunction(n, std::move(table));
}

BooleanFunction BooleanFunction::random_balanced(int n, std::uint64_t seed) {
  check_n(n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> table(size, false);
  for (std::size_t a = 0; a < size / 2; ++a) table[a] = true;
  // Fisher-Yates with an explicit modulus draw; reproducible across
  // platforms for a given seed.
  std::mt19937_64 rng(seed);
  for (std::size_t i = size - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    const bool tmp = table[i];
    table[i] = table[j];
    table[j] = tmp;
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction BooleanFunction::from_spec(int n, std::string_view spec) {
  check_n(n);
  if (spec == "constant0") return constant(n, 0);
  if (spec == "constant1") return constant(n, 1);
  if (spec == "balanced:parity") return parity(n);
  if (spec == "balanced:tophalf") return top_half(n);
  constexpr std::string_view kRandomPrefix = "balanced:random?seed=";
  if (spec.starts_with(kRandomPrefix)) {
    const std::string_view digits = spec.substr(kRandomPrefix.size());
    std::uint64_t seed = 0;
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size() ||
        digits.empty()) {
      throw ValueError("seed must be an unsigned 64-bit integer");
    }
    return random_balanced(n, seed);
  }
  if (!spec.empty() && spec.find_first_not_of("01") == std::string_view::npos) {
    if (spec.size() != (std::size_t{1} << n)) {
      std::ostringstream os;
      os << "truth table for " << n << " bits must have " << (1u << n)
         << " characters, got " << spec.size();
      throw ValueError(os.str());
    }
    std::vector<bool> table(spec.size());
    for (std::size_t a = 0; a < spec.size(); ++a) table[a] = spec[a] == '1';
    return BooleanFunction(n, std::move(table));
  }
  std::ostringstream os;
  os << "unknown function spec '" << std::string(spec)
     << "' (expected a {0,1} table or constant0, constant1, balanced:parity, "
        "balanced:tophalf, balanced:random?seed=<u64>)";
  throw ValueError(os.str());
}

bool BooleanFunction::value_at_index(std::uint32_t index) const {
  if (index >= table_.size()) throw ValueError("truth table index out of range");
  return table_[index];
}

bool BooleanFunction::value_on_mask(std::uint32_t machine_mask) const noexcept {
  // Written bit A_1 lives in mask bit 0 but is the MSB of the table index.
  std::uint32_t index = 0;
  for (int k = 0; k < n_; ++k) {
    if ((machine_mask >> k) & 1u) index |= std::uint32_t{1} << (n_ - 1 - k);
  }
  return table_[index];
}

std::size_t BooleanFunction::ones_count() const noexcept {
  std::size_t ones = 0;
  for (bool v : table_) ones += v ? 1 : 0;
  return ones;
}

bool BooleanFunction::is_constant() const noexcept {
  const std::size_t ones = ones_count();
  return ones == 0 || ones == table_.size();
}

bool BooleanFunction::is_balanced() const noexcept {
  return ones_count() * 2 == table_.size();
}

std::string BooleanFunction::table_string() const {
  std::string out(table_.size(), '0');
  for (std::size_t a = 0; a < table_.size(); ++a) {
    if (table_[a]) out[a] = '1';
  }
  return out;
}

std::string to_string(DJClassification c) {
  switch (c) {
    case DJClassification::constant: return "constant";
    case DJClassification::balanced: return "balanced";
    case DJClassification::promise_violated: return "promise_violated";
  }
  return "unknown";
}

Multivector build_E(int m) {
  check_m(m, 1);
  Multivector sum(m);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    sum += Multivector::from_blade(BladeIndex(mask, m), 1.0);
  }
  return sum;
}

BladeIndex probe_blade(int m) {
  check_m(m, 2);
  return BladeIndex(std::uint32_t{1} << (m - 2), m);
}

Multivector first_step(int m) {
  check_m(m, 2);
  return build_E(m) * Multivector::from_blade(probe_blade(m), 1.0);
}

Multivector apply_oracle(const BooleanFunction& f, const Multivector& x) {
  if (x.dim() != f.n() + 1) {
    std::ostringstream os;
    os << "oracle for " << f.n() << " bits acts on dim " << f.n() + 1
       << ", got dim " << x.dim();
    throw DimensionError(os.str());
  }
  const BladeIndex last_vector = BladeIndex::basis_vector(x.dim(), x.dim());
  Multivector out(x.dim());
  for (const auto& [b, c] : x.term_list()) {
    if (f.value_on_mask(b.mask())) {
      const SignedBlade moved = blade_product(b, last_vector);
      out += Multivector::from_blade(moved.blade, moved.sign.apply(c));
    } else {
      out += Multivector::from_blade(b, c);
    }
  }
  return out;
}

Multivector build_F(int m) {
  check_m(m, 2);
  Multivector sum(m);
  const std::uint32_t last_bit = std::uint32_t{1} << (m - 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if ((mask & last_bit) != 0) continue;
    const BladeIndex b(mask, m);
    sum += Multivector::from_blade(b, reversion_sign(b).value());
  }
  return sum;
}

DJOutcome classify_witness(long long witness, int n) {
  check_n(n);
  DJOutcome outcome;
  outcome.scalar_witness = witness;
  const long long full = 1LL << n;
  if (witness == full) {
    outcome.classification = DJClassification::constant;
    outcome.constant_value = 0;
  } else if (witness == -full) {
    outcome.classification = DJClassification::constant;
    outcome.constant_value = 1;
  } else if (witness == 0) {
    outcome.classification = DJClassification::balanced;
  } else {
    outcome.classification = DJClassification::promise_violated;
  }
  return outcome;
}

DJOutcome run_dj(const BooleanFunction& f) {
  return run_dj_stages(f).outcome;
}

DJStages run_dj_stages(const BooleanFunction& f) {
  const int m = f.n() + 1;
  Multivector start = first_step(m);
  Multivector after_oracle = apply_oracle(f, start);
  Multivector final_bag = build_F(m) * after_oracle;
  const long long witness = static_cast<long long>(final_bag.scalar_part());
  return DJStages{std::move(start), std::move(after_oracle),
                  std::move(final_bag), classify_witness(witness, f.n())};
}

}  // namespace gablade
