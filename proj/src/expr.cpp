#include "gablade/expr.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

namespace gablade {

namespace detail {

std::string positioned_message(int line, int col, const std::string& message) {
  std::ostringstream os;
  os << line << ':' << col << ": " << message;
  return os.str();
}

}  // namespace detail

const char* glyph_name(Glyph g) {
  switch (g) {
    case Glyph::wdot: return "WDOT";
    case Glyph::bdot: return "BDOT";
    case Glyph::right: return "RIGHT";
    case Glyph::left: return "LEFT";
    case Glyph::up: return "UP";
    case Glyph::down: return "DOWN";
    case Glyph::wsq: return "WSQ";
    case Glyph::bsq: return "BSQ";
  }
  return "?";
}

const char* glyph_symbol(Glyph g) {
  switch (g) {
    case Glyph::wdot: return "∘";   // white dot
    case Glyph::bdot: return "•";   // black dot
    case Glyph::right: return "→";  // e1
    case Glyph::left: return "←";   // -e1
    case Glyph::up: return "↑";     // e2
    case Glyph::down: return "↓";   // -e2
    case Glyph::wsq: return "□";    // e12
    case Glyph::bsq: return "■";    // -e12
  }
  return "?";
}

Multivector glyph_value(Glyph g) {
  switch (g) {
    case Glyph::wdot: return Multivector::scalar(2, 1.0);
    case Glyph::bdot: return Multivector::scalar(2, -1.0);
    case Glyph::right: return Multivector::from_blade(BladeIndex(0b01u, 2), 1.0);
    case Glyph::left: return Multivector::from_blade(BladeIndex(0b01u, 2), -1.0);
    case Glyph::up: return Multivector::from_blade(BladeIndex(0b10u, 2), 1.0);
    case Glyph::down: return Multivector::from_blade(BladeIndex(0b10u, 2), -1.0);
    case Glyph::wsq: return Multivector::from_blade(BladeIndex(0b11u, 2), 1.0);
    case Glyph::bsq: return Multivector::from_blade(BladeIndex(0b11u, 2), -1.0);
  }
  throw ValueError("unknown glyph");
}

namespace {

enum class TokenKind {
  number,
  blade,
  ident,
  glyph,
  plus,
  minus,
  star,
  tilde,
  lparen,
  rparen,
  comma,
  end
};

struct Token {
  TokenKind kind = TokenKind::end;
  SourcePos pos;
  std::string text;
  double number_value = 0.0;
  bool is_integer = false;
  std::uint32_t blade_mask = 0;
  int blade_min_dim = 0;
  Glyph glyph = Glyph::wdot;
};

[[noreturn]] void fail(ParseErrorKind kind, SourcePos pos,
                       const std::string& message) {
  throw ParseError(kind, pos.offset, pos.line, pos.col, message);
}

// Positions (line and column) are byte-based; the glyph symbols advance the
// column by their UTF-8 length.
class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    for (;;) {
      skip_whitespace();
      Token t = next_token();
      const bool done = t.kind == TokenKind::end;
      tokens.push_back(std::move(t));
      if (done) break;
    }
    return tokens;
  }

 private:
  bool eof() const { return offset_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
  }
  char advance() {
    const char c = src_[offset_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  SourcePos here() const { return SourcePos{offset_, line_, col_}; }

  void skip_whitespace() {
    while (!eof()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

  Token next_token() {
    const SourcePos pos = here();
    if (eof()) return Token{TokenKind::end, pos};

    const char c = peek();
    switch (c) {
      case '+': advance(); return Token{TokenKind::plus, pos, "+"};
      case '-': advance(); return Token{TokenKind::minus, pos, "-"};
      case '*': advance(); return Token{TokenKind::star, pos, "*"};
      case '~': advance(); return Token{TokenKind::tilde, pos, "~"};
      case '(': advance(); return Token{TokenKind::lparen, pos, "("};
      case ')': advance(); return Token{TokenKind::rparen, pos, ")"};
      case ',': advance(); return Token{TokenKind::comma, pos, ","};
      default: break;
    }

    if (is_digit(c)) return lex_number(pos);
    if (c == 'e') return lex_blade_or_ident(pos);
    if (is_ident_start(c)) return lex_ident(pos);
    if (static_cast<unsigned char>(c) >= 0x80) return lex_glyph_symbol(pos);

    std::ostringstream os;
    os << "unexpected character '" << c << "'";
    fail(ParseErrorKind::lexical, pos, os.str());
  }

  Token lex_number(SourcePos pos) {
    const std::size_t start = offset_;
    while (!eof() && is_digit(peek())) advance();
    bool is_integer = true;
    if (!eof() && peek() == '.') {
      if (!is_digit(peek(1))) {
        fail(ParseErrorKind::lexical, pos,
             "malformed number: expected digits after '.'");
      }
      advance();
      is_integer = false;
      while (!eof() && is_digit(peek())) advance();
    }
    const std::string_view text = src_.substr(start, offset_ - start);
    double value = 0.0;
    const auto res =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() ||
        !std::isfinite(value)) {
      fail(ParseErrorKind::lexical, pos, "number out of range");
    }
    Token t{TokenKind::number, pos, std::string(text)};
    t.number_value = value;
    t.is_integer = is_integer;
    return t;
  }

  // 'e' starts a blade literal (e{1,2}, e12, eb0110) or an identifier.
  Token lex_blade_or_ident(SourcePos pos) {
    if (peek(1) == '{') return lex_braced_blade(pos);
    if (peek(1) == 'b' && (peek(2) == '0' || peek(2) == '1')) {
      return lex_bit_blade(pos);
    }
    if (is_digit(peek(1))) return lex_short_blade(pos);
    return lex_ident(pos);
  }

  Token lex_braced_blade(SourcePos pos) {
    advance();  // e
    advance();  // {
    std::uint32_t mask = 0;
    int last_index = 0;
    for (;;) {
      skip_whitespace();
      const SourcePos index_pos = here();
      if (eof() || !is_digit(peek())) {
        fail(ParseErrorKind::lexical, index_pos, "expected blade index");
      }
      long index = 0;
      while (!eof() && is_digit(peek())) {
        index = index * 10 + (advance() - '0');
        if (index > kMaxDim) break;
      }
      if (index < 1 || index > kMaxDim) {
        std::ostringstream os;
        os << "blade index must be in [1, " << kMaxDim << "]";
        fail(ParseErrorKind::lexical, index_pos, os.str());
      }
      if (index <= last_index) {
        fail(ParseErrorKind::lexical, index_pos,
             "blade indices must be strictly increasing");
      }
      last_index = static_cast<int>(index);
      mask |= std::uint32_t{1} << (index - 1);
      skip_whitespace();
      if (!eof() && peek() == ',') {
        advance();
        continue;
      }
      if (!eof() && peek() == '}') {
        advance();
        break;
      }
      fail(ParseErrorKind::lexical, here(),
           "expected ',' or '}' in blade literal");
    }
    Token t{TokenKind::blade, pos, "e{...}"};
    t.blade_mask = mask;
    t.blade_min_dim = last_index;
    return t;
  }

  Token lex_bit_blade(SourcePos pos) {
    advance();  // e
    advance();  // b
    std::uint32_t mask = 0;
    int bits = 0;
    while (!eof() && (peek() == '0' || peek() == '1')) {
      if (bits == kMaxDim) {
        std::ostringstream os;
        os << "bit word longer than " << kMaxDim;
        fail(ParseErrorKind::lexical, pos, os.str());
      }
      if (advance() == '1') mask |= std::uint32_t{1} << bits;
      ++bits;
    }
    Token t{TokenKind::blade, pos, "eb..."};
    t.blade_mask = mask;
    t.blade_min_dim = bits;  // the word spells out the dimension
    return t;
  }

  Token lex_short_blade(SourcePos pos) {
    advance();  // e
    std::uint32_t mask = 0;
    int last_index = 0;
    while (!eof() && is_digit(peek())) {
      const SourcePos digit_pos = here();
      const int index = advance() - '0';
      if (index == 0) {
        fail(ParseErrorKind::lexical, digit_pos,
             "blade index 0 is invalid (indices are 1-based)");
      }
      if (index <= last_index) {
        fail(ParseErrorKind::lexical, digit_pos,
             "blade indices must be strictly increasing");
      }
      last_index = index;
      mask |= std::uint32_t{1} << (index - 1);
    }
    Token t{TokenKind::blade, pos, "e..."};
    t.blade_mask = mask;
    t.blade_min_dim = last_index;
    return t;
  }

  Token lex_ident(SourcePos pos) {
    const std::size_t start = offset_;
    while (!eof() && is_ident_char(peek())) advance();
    return Token{TokenKind::ident, pos,
                 std::string(src_.substr(start, offset_ - start))};
  }

  Token lex_glyph_symbol(SourcePos pos) {
    const std::string_view rest = src_.substr(offset_);
    for (Glyph g : kAllGlyphs) {
      const std::string_view sym = glyph_symbol(g);
      if (rest.starts_with(sym)) {
        for (std::size_t i = 0; i < sym.size(); ++i) advance();
        Token t{TokenKind::glyph, pos, std::string(sym)};
        t.glyph = g;
        return t;
      }
    }
    fail(ParseErrorKind::lexical, pos, "invalid character");
  }

  std::string_view src_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int col_ = 1;
};

constexpr int kMaxNesting = 256;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr(0);
    if (current().kind != TokenKind::end) {
      fail(ParseErrorKind::syntax, current().pos, "unexpected trailing input");
    }
    return e;
  }

 private:
  const Token& current() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  void expect(TokenKind kind, const char* what) {
    if (current().kind != kind) {
      std::ostringstream os;
      os << "expected " << what;
      fail(ParseErrorKind::syntax, current().pos, os.str());
    }
    ++index_;
  }

  static ExprPtr make(SourcePos pos,
                      std::variant<ScalarLit, BladeLit, GlyphLit, Neg, Add, Sub,
                                   Mul, Reverse, GradeSel, ScalarSel>
                          node) {
    auto e = std::make_unique<ExprNode>();
    e->node = std::move(node);
    e->pos = pos;
    return e;
  }

  ExprPtr parse_expr(int depth) {
    check_depth(depth);
    ExprPtr lhs = parse_term(depth);
    while (current().kind == TokenKind::plus ||
           current().kind == TokenKind::minus) {
      const Token op = take();
      ExprPtr rhs = parse_term(depth);
      if (op.kind == TokenKind::plus) {
        lhs = make(op.pos, Add{std::move(lhs), std::move(rhs)});
      } else {
        lhs = make(op.pos, Sub{std::move(lhs), std::move(rhs)});
      }
    }
    return lhs;
  }

  ExprPtr parse_term(int depth) {
    ExprPtr lhs = parse_factor(depth);
    while (current().kind == TokenKind::star) {
      const Token op = take();
      ExprPtr rhs = parse_factor(depth);
      lhs = make(op.pos, Mul{std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_factor(int depth) {
    check_depth(depth);
    if (current().kind == TokenKind::minus) {
      const Token op = take();
      return make(op.pos, Neg{parse_factor(depth + 1)});
    }
    ExprPtr e = parse_atom(depth);
    while (current().kind == TokenKind::tilde) {
      const Token op = take();
      e = make(op.pos, Reverse{std::move(e)});
    }
    return e;
  }

  ExprPtr parse_atom(int depth) {
    const Token& tok = current();
    switch (tok.kind) {
      case TokenKind::number: {
        const Token num = take();
        // A number directly followed by a blade literal is a coefficient.
        if (current().kind == TokenKind::blade) {
          const Token blade = take();
          ExprPtr c = make(num.pos, ScalarLit{num.number_value});
          ExprPtr b =
              make(blade.pos, BladeLit{blade.blade_mask, blade.blade_min_dim});
          return make(num.pos, Mul{std::move(c), std::move(b)});
        }
        return make(num.pos, ScalarLit{num.number_value});
      }
      case TokenKind::blade: {
        const Token blade = take();
        return make(blade.pos, BladeLit{blade.blade_mask, blade.blade_min_dim});
      }
      case TokenKind::glyph: {
        const Token g = take();
        return make(g.pos, GlyphLit{g.glyph});
      }
      case TokenKind::lparen: {
        take();
        ExprPtr e = parse_expr(depth + 1);
        expect(TokenKind::rparen, "')'");
        return e;
      }
      case TokenKind::ident:
        return parse_named(depth);
      default:
        fail(ParseErrorKind::syntax, tok.pos, "expected a value");
    }
  }

  ExprPtr parse_named(int depth) {
    const Token name = take();
    if (name.text == "rev" || name.text == "grade" || name.text == "scalar") {
      expect(TokenKind::lparen, "'(' after function name");
      ExprPtr child = parse_expr(depth + 1);
      if (name.text == "grade") {
        expect(TokenKind::comma, "',' before the grade");
        const Token& k = current();
        if (k.kind != TokenKind::number || !k.is_integer ||
            k.number_value > kMaxDim) {
          std::ostringstream os;
          os << "expected an integer grade in [0, " << kMaxDim << "]";
          fail(ParseErrorKind::syntax, k.pos, os.str());
        }
        take();
        expect(TokenKind::rparen, "')'");
        return make(name.pos,
                    GradeSel{std::move(child),
                             static_cast<int>(k.number_value)});
      }
      expect(TokenKind::rparen, "')'");
      if (name.text == "rev") return make(name.pos, Reverse{std::move(child)});
      return make(name.pos, ScalarSel{std::move(child)});
    }
    for (Glyph g : kAllGlyphs) {
      if (name.text == glyph_name(g)) return make(name.pos, GlyphLit{g});
    }
    std::ostringstream os;
    os << "unknown glyph '" << name.text << "'";
    fail(ParseErrorKind::unknown_glyph, name.pos, os.str());
  }

  void check_depth(int depth) const {
    if (depth > kMaxNesting) {
      fail(ParseErrorKind::syntax, current().pos,
           "expression nested too deeply");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

[[noreturn]] void fail_eval(const SourcePos& pos, const std::string& message) {
  throw EvalError(pos.offset, pos.line, pos.col, message);
}

struct Evaluator {
  int dim;

  Multivector operator()(const ExprNode& e) const {
    return std::visit([&](const auto& node) { return eval(node, e.pos); },
                      e.node);
  }

  Multivector eval(const ScalarLit& lit, const SourcePos&) const {
    return Multivector::scalar(dim, lit.value);
  }

  Multivector eval(const BladeLit& lit, const SourcePos& pos) const {
    if (lit.min_dim > dim) {
      std::ostringstream os;
      os << "blade literal needs dimension >= " << lit.min_dim
         << ", evaluating at dim " << dim;
      fail_eval(pos, os.str());
    }
    return Multivector::from_blade(BladeIndex(lit.mask, dim), 1.0);
  }

  Multivector eval(const GlyphLit& lit, const SourcePos& pos) const {
    if (dim != 2) {
      std::ostringstream os;
      os << "glyph " << glyph_name(lit.glyph) << " requires dim = 2, got dim "
         << dim;
      fail_eval(pos, os.str());
    }
    return glyph_value(lit.glyph);
  }

  Multivector eval(const Neg& n, const SourcePos&) const {
    return -(*this)(*n.child);
  }
  Multivector eval(const Add& n, const SourcePos&) const {
    return (*this)(*n.lhs) + (*this)(*n.rhs);
  }
  Multivector eval(const Sub& n, const SourcePos&) const {
    return (*this)(*n.lhs) - (*this)(*n.rhs);
  }
  Multivector eval(const Mul& n, const SourcePos&) const {
    return (*this)(*n.lhs) * (*this)(*n.rhs);
  }
  Multivector eval(const Reverse& n, const SourcePos&) const {
    return (*this)(*n.child).reversed();
  }

  Multivector eval(const GradeSel& n, const SourcePos& pos) const {
    if (n.k > dim) {
      std::ostringstream os;
      os << "grade " << n.k << " outside [0, " << dim << "]";
      fail_eval(pos, os.str());
    }
    return (*this)(*n.child).grade_project(n.k);
  }

  Multivector eval(const ScalarSel& n, const SourcePos&) const {
    return (*this)(*n.child).grade_project(0);
  }
};

}  // namespace

ExprPtr parse(std::string_view src) {
  return Parser(Lexer(src).run()).run();
}

Multivector evaluate(const ExprNode& e, int dim) {
  if (dim < 1 || dim > kMaxDim) {
    std::ostringstream os;
    os << "evaluation dimension must be in [1, " << kMaxDim << "], got " << dim;
    throw DimensionError(os.str());
  }
  return Evaluator{dim}(e);
}

Multivector evaluate(std::string_view src, int dim) {
  const ExprPtr e = parse(src);
  return evaluate(*e, dim);
}

std::string format(const Multivector& x, FormatStyle style) {
  if (style == FormatStyle::algebraic) return x.to_string();

  if (x.dim() != 2) {
    throw ValueError("glyph format requires dim 2");
  }
  if (!x.has_integer_coeffs()) {
    throw ValueError("glyph format requires integer coefficients");
  }
  if (x.is_zero()) return "(empty bag)";

  static constexpr Glyph kPositive[4] = {Glyph::wdot, Glyph::right, Glyph::up,
                                         Glyph::wsq};
  static constexpr Glyph kNegative[4] = {Glyph::bdot, Glyph::left, Glyph::down,
                                         Glyph::bsq};
  std::string out;
  for (const auto& [mask, c] : x.terms()) {
    const Glyph g = c > 0 ? kPositive[mask] : kNegative[mask];
    const long long copies = static_cast<long long>(std::abs(c));
    for (long long i = 0; i < copies; ++i) {
      if (!out.empty()) out += ' ';
      out += glyph_symbol(g);
    }
  }
  return out;
}

}  // namespace gablade
