#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "gablade/multivector.hpp"

namespace gablade {

enum class ShapeKind { dot, arrow, square, edge, wall, cube };

// One drawable entry of a bag diagram: the shape class of a blade, the
// orientation carried by the coefficient's sign, and how many copies the
// coefficient contributes.
struct ShapeSpec {
  ShapeKind kind;
  Sign orientation;            // positive draws white / forward
  std::uint32_t blade_mask;    // axis (arrow, edge) or plane (wall) identity
  int multiplicity;            // |coefficient|, >= 1

  std::vector<int> axes() const;  // 1-based factor indices of blade_mask

  friend bool operator==(const ShapeSpec&, const ShapeSpec&) noexcept = default;
};

// Shape mapping per dimension:
//   dim 2: grade 0 -> dot, 1 -> arrow, 2 -> square
//   dim 3: grade 0 -> dot, 1 -> edge, 2 -> wall, 3 -> cube
// One ShapeSpec per nonzero term, ascending mask. Coefficients must be
// integers.
std::vector<ShapeSpec> bag_of_shapes(const Multivector& x);

// Deterministic 7-bit text diagram: a frame with one row per shape kind.
std::string render_ascii(const std::vector<ShapeSpec>& shapes);

// Standalone SVG 1.1 document with a declared viewBox; byte-identical for
// identical input. Dots are the only circle elements.
std::string render_svg(const std::vector<ShapeSpec>& shapes);

// Convenience: render a multivector directly.
std::string render_ascii(const Multivector& x);
std::string render_svg(const Multivector& x);

}  // namespace gablade
