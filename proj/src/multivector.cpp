#include "gablade/multivector.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace gablade {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

void require_same_dim(int a, int b) {
  if (a != b) {
    std::ostringstream os;
    os << "incompatible algebras: dim " << a << " vs dim " << b;
    throw DimensionError(os.str());
  }
}

bool is_integer_valued(double v) {
  return std::isfinite(v) && v == std::rint(v) &&
         std::abs(v) <= kExactIntegerLimit;
}

// Nonnegative coefficient as text. Integers print bare; everything else
// prints in fixed notation (shortest round-trip form), never scientific,
// so the expression grammar can read it back.
std::string format_coeff(double a) {
  if (is_integer_valued(a)) {
    return std::to_string(static_cast<long long>(a));
  }
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), a, std::chars_format::fixed);
  if (res.ec != std::errc()) {
    std::ostringstream os;  // extreme magnitudes that overflow the buffer
    os << a;
    return os.str();
  }
  return std::string(buf, res.ptr);
}

}  // namespace

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) {
    std::ostringstream os;
    os << "algebra dimension must be in [1, " << kMaxDim << "], got " << dim;
    throw DimensionError(os.str());
  }
}

Multivector Multivector::from_blade(BladeIndex b, double coeff) {
  if (!std::isfinite(coeff)) throw ValueError("coefficient must be finite");
  Multivector x(b.dim());
  if (coeff != 0.0) x.terms_.emplace(b.mask(), coeff);
  return x;
}

Multivector Multivector::scalar(int dim, double value) {
  return from_blade(BladeIndex::scalar(dim), value);
}

std::vector<std::pair<BladeIndex, double>> Multivector::term_list() const {
  std::vector<std::pair<BladeIndex, double>> out;
  out.reserve(terms_.size());
  for (const auto& [mask, c] : terms_) out.emplace_back(BladeIndex(mask, dim_), c);
  return out;
}

double Multivector::coeff(BladeIndex b) const {
  require_same_dim(dim_, b.dim());
  auto it = terms_.find(b.mask());
  return it == terms_.end() ? 0.0 : it->second;
}

double Multivector::scalar_part() const noexcept {
  auto it = terms_.find(0u);
  return it == terms_.end() ? 0.0 : it->second;
}

bool Multivector::has_integer_coeffs() const noexcept {
  for (const auto& [mask, c] : terms_) {
    if (!is_integer_valued(c)) return false;
  }
  return true;
}

Multivector Multivector::reversed() const {
  Multivector out(dim_);
  for (const auto& [mask, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), mask,
                            reversion_sign(BladeIndex(mask, dim_)).apply(c));
  }
  return out;
}

Multivector Multivector::grade_project(int k) const {
  if (k < 0 || k > dim_) {
    std::ostringstream os;
    os << "grade " << k << " outside [0, " << dim_ << "]";
    throw ValueError(os.str());
  }
  Multivector out(dim_);
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) == k) out.terms_.emplace_hint(out.terms_.end(), mask, c);
  }
  return out;
}

void Multivector::add_term(std::uint32_t mask, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_dim(dim_, other.dim_);
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_dim(dim_, other.dim_);
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

Multivector& Multivector::operator*=(double c) {
  if (c == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = (it->second == 0.0) ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector out(dim_);
  for (const auto& [mask, c] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), mask, -c);
  }
  return out;
}

Multivector operator*(const Multivector& x, const Multivector& y) {
  require_same_dim(x.dim_, y.dim_);
  const int dim = x.dim_;
  Multivector out(dim);

  const std::size_t pairs = x.terms_.size() * y.terms_.size();
  const std::size_t full = std::size_t{1} << dim;

  if (dim <= 20 && pairs * 4 >= full) {
    // Dense accumulation; accumulation order per target mask is identical
    // to the sparse path (left term major).
    std::vector<double> acc(full, 0.0);
    for (const auto& [ma, ca] : x.terms_) {
      for (const auto& [mb, cb] : y.terms_) {
        const double v = ca * cb;
        acc[ma ^ mb] += detail::product_parity(ma, mb) ? -v : v;
      }
    }
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      if (acc[mask] != 0.0) {
        out.terms_.emplace_hint(out.terms_.end(), mask, acc[mask]);
      }
    }
  } else {
    for (const auto& [ma, ca] : x.terms_) {
      for (const auto& [mb, cb] : y.terms_) {
        const double v = ca * cb;
        out.add_term(ma ^ mb, detail::product_parity(ma, mb) ? -v : v);
      }
    }
  }
  return out;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c] : terms_) {
    const bool neg = std::signbit(c);
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const double a = std::abs(c);
    if (mask == 0) {
      out += format_coeff(a);
    } else {
      if (a != 1.0) {
        out += format_coeff(a);
        out += ' ';
      }
      out += format_blade(BladeIndex(mask, dim_));
    }
  }
  return out;
}

nlohmann::json Multivector::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, c] : terms_) {
    terms.push_back({{"mask_bits", mask_bits(BladeIndex(mask, dim_))},
                     {"coeff", c}});
  }
  return nlohmann::json{{"dim", dim_}, {"terms", std::move(terms)}};
}

Multivector Multivector::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms")) {
    throw ValueError("multivector JSON must be {\"dim\": n, \"terms\": [...]}");
  }
  if (!j["dim"].is_number_integer()) {
    throw ValueError("\"dim\" must be an integer");
  }
  const int dim = j["dim"].get<int>();
  Multivector out(dim);
  const auto& terms = j["terms"];
  if (!terms.is_array()) throw ValueError("\"terms\" must be an array");
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("mask_bits") || !t.contains("coeff") ||
        !t["mask_bits"].is_string() || !t["coeff"].is_number()) {
      throw ValueError(
          "each term must be {\"mask_bits\": \"...\", \"coeff\": number}");
    }
    const std::string bits = t["mask_bits"].get<std::string>();
    if (bits.size() != static_cast<std::size_t>(dim)) {
      throw ValueError("\"mask_bits\" length must equal \"dim\"");
    }
    const BladeIndex b = blade_from_bits(bits);
    const double c = t["coeff"].get<double>();
    if (!std::isfinite(c)) throw ValueError("coefficient must be finite");
    out.add_term(b.mask(), c);
  }
  return out;
}

Multivector Multivector::from_json_text(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValueError("malformed JSON");
  return from_json(j);
}

}  // namespace gablade
