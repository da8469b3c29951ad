#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "gablade/expr.hpp"

using namespace gablade;
using gablade::testing::random_integer_mv;

namespace {

Multivector blade_term(std::uint32_t mask, int dim, double c) {
  return Multivector::from_blade(BladeIndex(mask, dim), c);
}

}  // namespace

TEST_CASE("parse produces the expected tree shapes") {
  const ExprPtr product = parse("e1 * e2");
  const auto& mul = std::get<Mul>(product->node);
  CHECK(std::holds_alternative<BladeLit>(mul.lhs->node));
  CHECK(std::holds_alternative<BladeLit>(mul.rhs->node));

  const ExprPtr glyphs = parse("BSQ * LEFT");
  const auto& gmul = std::get<Mul>(glyphs->node);
  CHECK(std::get<GlyphLit>(gmul.lhs->node).glyph == Glyph::bsq);
  CHECK(std::get<GlyphLit>(gmul.rhs->node).glyph == Glyph::left);

  const ExprPtr graded = parse("grade((1 + e12) * e1, 1)");
  const auto& sel = std::get<GradeSel>(graded->node);
  CHECK(sel.k == 1);
  CHECK(std::holds_alternative<Mul>(sel.child->node));
}

TEST_CASE("the worked decoding products all land on -e2") {
  const Multivector down = blade_term(0b10, 2, -1.0);
  CHECK(evaluate("BSQ * LEFT", 2) == down);
  CHECK(evaluate("RIGHT * BSQ", 2) == down);
  CHECK(evaluate("WSQ * RIGHT", 2) == down);
  CHECK(evaluate("LEFT * WSQ", 2) == down);
  CHECK(evaluate("DOWN", 2) == down);
}

TEST_CASE("glyphs evaluate to exactly their table entries") {
  CHECK(glyph_value(Glyph::wdot) == Multivector::scalar(2, 1.0));
  CHECK(glyph_value(Glyph::bdot) == Multivector::scalar(2, -1.0));
  CHECK(glyph_value(Glyph::right) == blade_term(0b01, 2, 1.0));
  CHECK(glyph_value(Glyph::left) == blade_term(0b01, 2, -1.0));
  CHECK(glyph_value(Glyph::up) == blade_term(0b10, 2, 1.0));
  CHECK(glyph_value(Glyph::down) == blade_term(0b10, 2, -1.0));
  CHECK(glyph_value(Glyph::wsq) == blade_term(0b11, 2, 1.0));
  CHECK(glyph_value(Glyph::bsq) == blade_term(0b11, 2, -1.0));
  for (Glyph g : kAllGlyphs) {
    CHECK(evaluate(glyph_name(g), 2) == glyph_value(g));
    CHECK(evaluate(glyph_symbol(g), 2) == glyph_value(g));
  }
}

TEST_CASE("evaluation follows the grammar") {
  CHECK(evaluate("e1 * e2 + e2 * e1", 2).is_zero());
  CHECK(evaluate("scalar(rev(e12) * e12)", 2) == Multivector::scalar(2, 1.0));
  CHECK(evaluate("e12 ~", 2) == blade_term(0b11, 2, -1.0));
  CHECK(evaluate("-e1~", 2) == blade_term(0b01, 2, -1.0));
  CHECK(evaluate("1 - 2 * e1", 2) ==
        Multivector::scalar(2, 1.0) + blade_term(0b01, 2, -2.0));
  CHECK(evaluate("grade(1 + e1 + e12, 1)", 2) == blade_term(0b01, 2, 1.0));
  CHECK(evaluate("(1 + e1) * (1 - e1)", 2).is_zero());
  CHECK(evaluate("2.5", 2) == Multivector::scalar(2, 2.5));
  CHECK(evaluate("eb110010", 6) == blade_term(0b010011, 6, 1.0));
  CHECK(evaluate("e{1,2,5}", 6) == blade_term(0b10011, 6, 1.0));
}

TEST_CASE("a number directly before a blade literal is a coefficient") {
  CHECK(evaluate("3 e{1,2}", 2) == blade_term(0b11, 2, 3.0));
  CHECK(evaluate("2 - e{1} + 3 e{1,2}", 2) ==
        Multivector::scalar(2, 2.0) + blade_term(0b01, 2, -1.0) +
            blade_term(0b11, 2, 3.0));
  CHECK_THROWS_AS(evaluate("e1 e2", 2), ParseError);
  CHECK_THROWS_AS(evaluate("2 e1 e2", 2), ParseError);
  CHECK_THROWS_AS(evaluate("2 3", 2), ParseError);
}

TEST_CASE("parse errors carry kind and position") {
  try {
    parse("e1 +");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::syntax);
    CHECK(e.offset() == 4);
    CHECK(e.line() == 1);
    CHECK(e.col() == 5);
    CHECK(std::string(e.what()).starts_with("1:5: "));
  }

  try {
    parse("e1 * FOO");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::unknown_glyph);
    CHECK(e.col() == 6);
  }

  try {
    parse("e1 @ e2");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::lexical);
    CHECK(e.col() == 4);
  }

  CHECK_THROWS_AS(parse("e{2,1}"), ParseError);
  CHECK_THROWS_AS(parse("e{1,1}"), ParseError);
  CHECK_THROWS_AS(parse("e0"), ParseError);
  CHECK_THROWS_AS(parse("e{25}"), ParseError);
  CHECK_THROWS_AS(parse("e{1,2"), ParseError);
  CHECK_THROWS_AS(parse("(e1"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("1."), ParseError);
  CHECK_THROWS_AS(parse("grade(e1)"), ParseError);
  CHECK_THROWS_AS(parse("grade(e1, 1.5)"), ParseError);
  CHECK_THROWS_AS(parse("rev e1"), ParseError);
  CHECK_THROWS_AS(parse("e1 e2"), ParseError);
}

TEST_CASE("evaluation errors are positioned") {
  // Glyphs only exist in the plane.
  CHECK_THROWS_AS(evaluate("WDOT", 3), EvalError);
  try {
    evaluate("1 + BSQ", 3);
    FAIL("expected an EvalError");
  } catch (const EvalError& e) {
    CHECK(e.col() == 5);
  }

  CHECK_THROWS_AS(evaluate("e3", 2), EvalError);
  CHECK_THROWS_AS(evaluate("eb010", 2), EvalError);
  CHECK_THROWS_AS(evaluate("grade(e1, 9)", 2), EvalError);
  CHECK_THROWS_AS(evaluate("e1", 0), DimensionError);
  CHECK_THROWS_AS(evaluate("e1", 25), DimensionError);
}

TEST_CASE("deeply nested input fails cleanly") {
  const std::string nested(10000, '(');
  CHECK_THROWS_AS(parse(nested + "1"), ParseError);
  const std::string minuses(10000, '-');
  CHECK_THROWS_AS(parse(minuses + "1"), ParseError);
}

TEST_CASE("algebraic format round-trips through the parser") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 6);
    const Multivector x = random_integer_mv(rng, dim, 10, 9);
    const std::string text = format(x, FormatStyle::algebraic);
    CHECK(evaluate(text, dim) == x);
  }
}

TEST_CASE("fuzzed inputs produce positioned errors, never crashes") {
  std::mt19937_64 rng(67);
  int failures = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t len = rng() % 41;
    std::string input;
    for (std::size_t i = 0; i < len; ++i) {
      input.push_back(static_cast<char>(rng() % 256));
    }
    try {
      (void)evaluate(input, 2);
    } catch (const ParseError& e) {
      if (e.line() < 1 || e.col() < 1) ++failures;
    } catch (const EvalError& e) {
      if (e.line() < 1 || e.col() < 1) ++failures;
    } catch (...) {
      ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("glyph format prints repeated shapes") {
  CHECK(format(Multivector::scalar(2, -2.0), FormatStyle::glyph) ==
        "• •");
  CHECK(format(Multivector(2), FormatStyle::glyph) == "(empty bag)");
  CHECK(format(Multivector::scalar(2, 1.0) + blade_term(0b01, 2, 1.0),
               FormatStyle::glyph) == "∘ →");
  CHECK(format(blade_term(0b10, 2, -3.0), FormatStyle::glyph) ==
        "↓ ↓ ↓");

  CHECK_THROWS_AS(format(Multivector(3), FormatStyle::glyph), ValueError);
  CHECK_THROWS_AS(format(Multivector::scalar(2, 0.5), FormatStyle::glyph),
                  ValueError);
}

TEST_CASE("algebraic format equals the canonical text form") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector x = random_integer_mv(rng, 4, 8, 5);
    CHECK(format(x, FormatStyle::algebraic) == x.to_string());
  }
}
