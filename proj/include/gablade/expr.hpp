#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "gablade/multivector.hpp"

namespace gablade {

struct SourcePos {
  std::size_t offset = 0;
  int line = 1;
  int col = 1;
};

// The dim-2 shape alphabet: white/black dots, the four arrows, white/black
// squares.
enum class Glyph { wdot, bdot, right, left, up, down, wsq, bsq };

inline constexpr Glyph kAllGlyphs[] = {Glyph::wdot, Glyph::bdot, Glyph::right,
                                       Glyph::left, Glyph::up,   Glyph::down,
                                       Glyph::wsq,  Glyph::bsq};

const char* glyph_name(Glyph g);      // "WDOT", ...
const char* glyph_symbol(Glyph g);    // UTF-8 arrow/dot/square
Multivector glyph_value(Glyph g);     // dim-2 table entry

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ScalarLit {
  double value;
};
struct BladeLit {
  std::uint32_t mask;
  int min_dim;  // smallest evaluation dimension the literal fits in
};
struct GlyphLit {
  Glyph glyph;
};
struct Neg {
  ExprPtr child;
};
struct Add {
  ExprPtr lhs, rhs;
};
struct Sub {
  ExprPtr lhs, rhs;
};
struct Mul {
  ExprPtr lhs, rhs;
};
struct Reverse {
  ExprPtr child;
};
struct GradeSel {
  ExprPtr child;
  int k;
};
struct ScalarSel {
  ExprPtr child;
};

struct ExprNode {
  std::variant<ScalarLit, BladeLit, GlyphLit, Neg, Add, Sub, Mul, Reverse,
               GradeSel, ScalarSel>
      node;
  SourcePos pos;
};

// Grammar:
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := '-' factor | atom postfix*
//   postfix := '~'                                  (reversion)
//   atom    := number | number blade | blade | glyph | '(' expr ')'
//            | 'rev(' expr ')' | 'grade(' expr ',' int ')' | 'scalar(' expr ')'
// Blade literals: e{1,2,5}; e125 when all indices are single digits;
// eb110010 as a bit word. A number directly followed by a blade literal is
// a coefficient (other juxtaposition is rejected; '*' is mandatory).
ExprPtr parse(std::string_view src);  // throws ParseError

Multivector evaluate(const ExprNode& e, int dim);      // throws EvalError
Multivector evaluate(std::string_view src, int dim);   // parse + evaluate

enum class FormatStyle { algebraic, glyph };

// algebraic: the multivector's canonical text form. glyph: dim-2 bags with
// integer coefficients as repeated shape symbols, "(empty bag)" when zero.
std::string format(const Multivector& x, FormatStyle style);

}  // namespace gablade
