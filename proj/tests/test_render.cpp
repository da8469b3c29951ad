#include <random>
#include <string>

#include "doctest.h"
#include "helpers.hpp"

#include "gablade/render.hpp"

using namespace gablade;
using gablade::testing::random_integer_mv;

namespace {

Multivector blade_term(std::uint32_t mask, int dim, double c) {
  return Multivector::from_blade(BladeIndex(mask, dim), c);
}

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::size_t count_elements_with(const std::string& doc,
                                const std::string& element,
                                const std::string& attribute) {
  std::size_t count = 0;
  const std::string open = "<" + element;
  for (std::size_t pos = doc.find(open); pos != std::string::npos;
       pos = doc.find(open, pos + open.size())) {
    const std::size_t end = doc.find('>', pos);
    if (end == std::string::npos) break;
    if (doc.substr(pos, end - pos).find(attribute) != std::string::npos) {
      ++count;
    }
  }
  return count;
}

// Minimal structural XML check: optional declaration, then one root element
// with properly nested tags and quoted attribute values.
bool xml_well_formed(const std::string& doc) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < doc.size() &&
           (doc[pos] == ' ' || doc[pos] == '\t' || doc[pos] == '\n' ||
            doc[pos] == '\r')) {
      ++pos;
    }
  };

  skip_ws();
  if (doc.compare(pos, 5, "<?xml") == 0) {
    const std::size_t end = doc.find("?>", pos);
    if (end == std::string::npos) return false;
    pos = end + 2;
  }

  std::vector<std::string> stack;
  bool seen_root = false;
  const auto is_name_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '-' || c == '_' || c == ':';
  };

  for (;;) {
    skip_ws();
    if (pos >= doc.size()) break;
    if (doc[pos] != '<') {
      if (stack.empty()) return false;  // text outside the root
      while (pos < doc.size() && doc[pos] != '<') {
        if (doc[pos] == '>') return false;
        ++pos;
      }
      continue;
    }
    if (doc.compare(pos, 4, "<!--") == 0) {
      const std::size_t end = doc.find("-->", pos);
      if (end == std::string::npos) return false;
      pos = end + 3;
      continue;
    }
    const bool closing = doc.compare(pos, 2, "</") == 0;
    pos += closing ? 2 : 1;
    std::string name;
    while (pos < doc.size() && is_name_char(doc[pos])) name += doc[pos++];
    if (name.empty()) return false;

    if (closing) {
      skip_ws();
      if (pos >= doc.size() || doc[pos] != '>') return false;
      ++pos;
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
      continue;
    }

    if (seen_root && stack.empty()) return false;  // second root
    seen_root = true;

    // Attributes.
    bool self_closing = false;
    for (;;) {
      skip_ws();
      if (pos >= doc.size()) return false;
      if (doc[pos] == '/') {
        if (pos + 1 >= doc.size() || doc[pos + 1] != '>') return false;
        pos += 2;
        self_closing = true;
        break;
      }
      if (doc[pos] == '>') {
        ++pos;
        break;
      }
      std::string attr;
      while (pos < doc.size() && is_name_char(doc[pos])) attr += doc[pos++];
      if (attr.empty()) return false;
      skip_ws();
      if (pos >= doc.size() || doc[pos] != '=') return false;
      ++pos;
      skip_ws();
      if (pos >= doc.size() || doc[pos] != '"') return false;
      ++pos;
      while (pos < doc.size() && doc[pos] != '"') {
        if (doc[pos] == '<') return false;
        ++pos;
      }
      if (pos >= doc.size()) return false;
      ++pos;
    }
    if (!self_closing) stack.push_back(name);
  }
  return stack.empty() && seen_root;
}

}  // namespace

TEST_CASE("bag_of_shapes maps terms to shapes") {
  const auto neg_two = bag_of_shapes(Multivector::scalar(2, -2.0));
  REQUIRE(neg_two.size() == 1);
  CHECK(neg_two[0] ==
        ShapeSpec{ShapeKind::dot, Sign::negative(), 0u, 2});

  const auto four = bag_of_shapes(Multivector::scalar(3, 4.0));
  REQUIRE(four.size() == 1);
  CHECK(four[0] == ShapeSpec{ShapeKind::dot, Sign::positive(), 0u, 4});

  CHECK(bag_of_shapes(Multivector(2)).empty());

  const Multivector mixed = Multivector::scalar(2, 1.0) +
                            blade_term(0b01, 2, -3.0) +
                            blade_term(0b11, 2, 2.0);
  const auto shapes = bag_of_shapes(mixed);
  REQUIRE(shapes.size() == 3);
  CHECK(shapes[0].kind == ShapeKind::dot);
  CHECK(shapes[1].kind == ShapeKind::arrow);
  CHECK(shapes[1].orientation == Sign::negative());
  CHECK(shapes[1].multiplicity == 3);
  CHECK(shapes[2].kind == ShapeKind::square);

  Multivector full3(3);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    full3 += blade_term(mask, 3, 1.0);
  }
  const auto kinds = bag_of_shapes(full3);
  std::size_t dots = 0, edges = 0, walls = 0, cubes = 0;
  for (const ShapeSpec& s : kinds) {
    if (s.kind == ShapeKind::dot) ++dots;
    if (s.kind == ShapeKind::edge) ++edges;
    if (s.kind == ShapeKind::wall) ++walls;
    if (s.kind == ShapeKind::cube) ++cubes;
  }
  CHECK(dots == 1);
  CHECK(edges == 3);
  CHECK(walls == 3);
  CHECK(cubes == 1);
}

TEST_CASE("bag_of_shapes rejects unsupported input") {
  CHECK_THROWS_AS(bag_of_shapes(Multivector(4)), RenderError);
  CHECK_THROWS_AS(bag_of_shapes(Multivector::scalar(2, 0.5)), RenderError);
}

TEST_CASE("shape count equals the sum of coefficient magnitudes") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 2);
    const Multivector x = random_integer_mv(rng, dim, 10, 6);
    long long expected = 0;
    for (const auto& [mask, c] : x.terms()) {
      expected += static_cast<long long>(std::abs(c));
    }
    long long total = 0;
    for (const ShapeSpec& s : bag_of_shapes(x)) total += s.multiplicity;
    CHECK(total == expected);
  }
}

TEST_CASE("bag_of_shapes is invertible on integer bags of known dim") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 + static_cast<int>(rng() % 2);
    const Multivector x = random_integer_mv(rng, dim, 10, 6);
    Multivector rebuilt(dim);
    for (const ShapeSpec& s : bag_of_shapes(x)) {
      rebuilt += Multivector::from_blade(
          BladeIndex(s.blade_mask, dim),
          s.orientation.apply(static_cast<double>(s.multiplicity)));
    }
    CHECK(rebuilt == x);
  }
}

TEST_CASE("ascii rendering is deterministic 7-bit text") {
  const Multivector bag = Multivector::scalar(2, -2.0) +
                          blade_term(0b01, 2, 1.0) + blade_term(0b11, 2, -1.0);
  const std::string a = render_ascii(bag);
  const std::string b = render_ascii(bag);
  CHECK(a == b);
  for (char c : a) {
    CHECK(static_cast<unsigned char>(c) < 128);
  }
  CHECK(a.find("* *") != std::string::npos);       // two black dots
  CHECK(a.find("->") != std::string::npos);        // one right arrow
  CHECK(a.find("[#]") != std::string::npos);       // one black square
  CHECK(render_ascii(Multivector(2)).find("(empty bag)") != std::string::npos);
}

TEST_CASE("ascii rendering falls back to a count label") {
  const std::string full = render_ascii(Multivector::scalar(2, 12.0));
  CHECK(count_occurrences(full, " o") == 12);
  CHECK(full.find("x12") == std::string::npos);

  const std::string big = render_ascii(Multivector::scalar(2, 40.0));
  CHECK(big.find("o x40") != std::string::npos);
  CHECK(count_occurrences(big, " o") == 1);
}

TEST_CASE("svg rendering is well-formed, deterministic, and countable") {
  const Multivector bag = Multivector::scalar(2, -2.0) +
                          blade_term(0b01, 2, 1.0) + blade_term(0b11, 2, -1.0);
  const std::string doc = render_svg(bag);
  CHECK(doc == render_svg(bag));
  CHECK(xml_well_formed(doc));
  CHECK(doc.find("viewBox") != std::string::npos);
  CHECK(doc.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);

  // Exactly two black circles for the -2 scalar, no white ones.
  CHECK(count_elements_with(doc, "circle", "fill=\"black\"") == 2);
  CHECK(count_elements_with(doc, "circle", "fill=\"white\"") == 0);

  const std::string empty = render_svg(Multivector(2));
  CHECK(xml_well_formed(empty));
  CHECK(empty.find("empty bag") != std::string::npos);

  Multivector full3(3);
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    full3 += blade_term(mask, 3, 1.0);
  }
  const std::string three_d = render_svg(full3);
  CHECK(xml_well_formed(three_d));
  CHECK(count_elements_with(three_d, "circle", "fill=\"white\"") == 1);
  CHECK(three_d.find("<polygon") != std::string::npos);  // walls and the cube

  const std::string labeled = render_svg(Multivector::scalar(3, 100.0));
  CHECK(xml_well_formed(labeled));
  CHECK(count_elements_with(labeled, "circle", "fill=\"white\"") == 1);
  CHECK(labeled.find("x 100") != std::string::npos);
}

TEST_CASE("svg validator rejects malformed documents") {
  CHECK_FALSE(xml_well_formed("<svg><circle></svg>"));
  CHECK_FALSE(xml_well_formed("<svg></svg><svg></svg>"));
  CHECK_FALSE(xml_well_formed("<svg attr=unquoted></svg>"));
  CHECK(xml_well_formed("<svg a=\"1\"><g/></svg>"));
}
