#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gablade/blade.hpp"

namespace gablade {

// Sparse real linear combination of blades ("bag of blades"). Immutable in
// spirit: every operation returns a fresh value, stored coefficients are
// never exactly zero, and all keys share the algebra dimension.
class Multivector {
 public:
  explicit Multivector(int dim);  // the zero multivector

  static Multivector from_blade(BladeIndex b, double coeff);
  static Multivector scalar(int dim, double value);

  int dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  // mask -> coefficient, ascending mask.
  const std::map<std::uint32_t, double>& terms() const noexcept {
    return terms_;
  }
  std::vector<std::pair<BladeIndex, double>> term_list() const;

  double coeff(BladeIndex b) const;       // 0 if the blade is absent
  double scalar_part() const noexcept;    // coefficient of the zero mask
  bool has_integer_coeffs() const noexcept;

  Multivector reversed() const;
  Multivector grade_project(int k) const;

  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  Multivector& operator*=(double c);

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) {
    lhs -= rhs;
    return lhs;
  }
  Multivector operator-() const;
  friend Multivector operator*(Multivector x, double c) {
    x *= c;
    return x;
  }
  friend Multivector operator*(double c, Multivector x) {
    x *= c;
    return x;
  }

  // Geometric product, the sign-tracked XOR of Eq-style blade masks
  // extended by linearity.
  friend Multivector operator*(const Multivector& x, const Multivector& y);

  friend bool operator==(const Multivector&, const Multivector&) noexcept =
      default;

  // Canonical text form: terms by ascending mask, "2 - e{1} + 3 e{1,2}".
  std::string to_string() const;

  // {"dim": n, "terms": [{"mask_bits": "...", "coeff": c}, ...]}
  nlohmann::json to_json() const;
  static Multivector from_json(const nlohmann::json& j);
  static Multivector from_json_text(std::string_view text);

 private:
  void add_term(std::uint32_t mask, double c);

  int dim_;
  std::map<std::uint32_t, double> terms_;
};

inline Multivector reverse(const Multivector& x) { return x.reversed(); }

}  // namespace gablade
