#include "gablade/blade.hpp"

#include <sstream>

namespace gablade {

namespace {

void check_dim_range(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    std::ostringstream os;
    os << "algebra dimension must be in [1, " << kMaxDim << "], got " << dim;
    throw DimensionError(os.str());
  }
}

}  // namespace

namespace detail {

void require_same_dim(const BladeIndex& a, const BladeIndex& b) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << "incompatible algebras: dim " << a.dim() << " vs dim " << b.dim();
    throw DimensionError(os.str());
  }
}

}  // namespace detail

BladeIndex::BladeIndex(std::uint32_t mask, int dim) : mask_(mask), dim_(dim) {
  check_dim_range(dim);
  if (dim < 32 && (mask >> dim) != 0) {
    std::ostringstream os;
    os << "blade mask " << mask << " does not fit in dimension " << dim;
    throw ValueError(os.str());
  }
}

BladeIndex BladeIndex::basis_vector(int k, int dim) {
  if (k < 1 || k > dim) {
    std::ostringstream os;
    os << "basis vector index " << k << " outside [1, " << dim << "]";
    throw ValueError(os.str());
  }
  return BladeIndex(std::uint32_t{1} << (k - 1), dim);
}

BladeIndex BladeIndex::pseudoscalar(int dim) {
  check_dim_range(dim);
  return BladeIndex((std::uint32_t{1} << dim) - 1u, dim);
}

Sign product_sign(BladeIndex a, BladeIndex b) {
  detail::require_same_dim(a, b);
  return detail::product_parity(a.mask(), b.mask()) ? Sign::negative()
                                                    : Sign::positive();
}

SignedBlade blade_product(BladeIndex a, BladeIndex b) {
  detail::require_same_dim(a, b);
  return SignedBlade{product_sign(a, b),
                     BladeIndex(a.mask() ^ b.mask(), a.dim())};
}

Sign reversion_sign(BladeIndex a) noexcept {
  const int g = grade(a);
  return Sign::from_parity(static_cast<unsigned>(g * (g - 1) / 2));
}

std::string format_blade(BladeIndex b) {
  if (b.is_scalar()) return "1";
  std::string out = "e{";
  bool first = true;
  for (int k = 0; k < b.dim(); ++k) {
    if ((b.mask() >> k) & 1u) {
      if (!first) out += ',';
      out += std::to_string(k + 1);
      first = false;
    }
  }
  out += '}';
  return out;
}

std::string mask_bits(BladeIndex b) {
  std::string bits(static_cast<std::size_t>(b.dim()), '0');
  for (int k = 0; k < b.dim(); ++k) {
    if ((b.mask() >> k) & 1u) bits[static_cast<std::size_t>(k)] = '1';
  }
  return bits;
}

BladeIndex blade_from_bits(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxDim)) {
    std::ostringstream os;
    os << "bit word length must be in [1, " << kMaxDim << "], got "
       << bits.size();
    throw ValueError(os.str());
  }
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      mask |= std::uint32_t{1} << k;
    } else if (bits[k] != '0') {
      throw ValueError("bit word may contain only '0' and '1'");
    }
  }
  return BladeIndex(mask, static_cast<int>(bits.size()));
}

}  // namespace gablade
