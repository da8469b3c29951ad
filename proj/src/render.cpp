#include "gablade/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace gablade {

namespace {

// Coefficients beyond this many copies fall back to one shape and a count
// label.
constexpr int kMaxRepeatedShapes = 12;

constexpr double kCoeffDrawLimit = 2147483647.0;

const char* kind_label(ShapeKind k) {
  switch (k) {
    case ShapeKind::dot: return "dots";
    case ShapeKind::arrow: return "arrows";
    case ShapeKind::square: return "squares";
    case ShapeKind::edge: return "edges";
    case ShapeKind::wall: return "walls";
    case ShapeKind::cube: return "cubes";
  }
  return "?";
}

ShapeKind kind_for(int dim, int g) {
  if (dim == 2) {
    switch (g) {
      case 0: return ShapeKind::dot;
      case 1: return ShapeKind::arrow;
      default: return ShapeKind::square;
    }
  }
  switch (g) {
    case 0: return ShapeKind::dot;
    case 1: return ShapeKind::edge;
    case 2: return ShapeKind::wall;
    default: return ShapeKind::cube;
  }
}

std::string ascii_token(const ShapeSpec& s) {
  const bool white = !s.orientation.is_negative();
  switch (s.kind) {
    case ShapeKind::dot:
      return white ? "o" : "*";
    case ShapeKind::arrow:
      if (s.axes().front() == 1) return white ? "->" : "<-";
      return white ? "^" : "v";
    case ShapeKind::square:
      return white ? "[ ]" : "[#]";
    case ShapeKind::edge: {
      const std::string axis = std::to_string(s.axes().front());
      return white ? axis + ">" : "<" + axis;
    }
    case ShapeKind::wall: {
      std::string plane;
      for (int a : s.axes()) plane += std::to_string(a);
      return white ? "[" + plane + "]" : "#" + plane + "#";
    }
    case ShapeKind::cube:
      return white ? "{ }" : "{#}";
  }
  return "?";
}

struct Row {
  ShapeKind kind;
  std::vector<const ShapeSpec*> shapes;
};

std::vector<Row> group_by_kind(const std::vector<ShapeSpec>& shapes) {
  std::vector<Row> rows;
  constexpr ShapeKind kOrder[] = {ShapeKind::dot,  ShapeKind::arrow,
                                  ShapeKind::square, ShapeKind::edge,
                                  ShapeKind::wall, ShapeKind::cube};
  for (ShapeKind k : kOrder) {
    Row row{k, {}};
    for (const ShapeSpec& s : shapes) {
      if (s.kind == k) row.shapes.push_back(&s);
    }
    if (!row.shapes.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

std::string fmt2(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Vec2 {
  double x, y;
};

Vec2 axis_dir2(int axis, bool forward) {
  // Screen y grows downward; e2 points up.
  Vec2 d = axis == 1 ? Vec2{1.0, 0.0} : Vec2{0.0, -1.0};
  if (!forward) d = {-d.x, -d.y};
  return d;
}

Vec2 axis_dir3(int axis, bool forward) {
  Vec2 d{0.0, -1.0};
  if (axis == 1) d = {0.866, 0.5};
  if (axis == 2) d = {-0.866, 0.5};
  if (!forward) d = {-d.x, -d.y};
  return d;
}

class SvgWriter {
 public:
  void circle(double cx, double cy, double r, const char* fill) {
    body_ += "  <circle cx=\"" + fmt2(cx) + "\" cy=\"" + fmt2(cy) + "\" r=\"" +
             fmt2(r) + "\" fill=\"" + fill + "\" stroke=\"black\"/>\n";
  }
  void rect(double x, double y, double w, double h, const char* fill,
            bool rounded = false) {
    body_ += "  <rect x=\"" + fmt2(x) + "\" y=\"" + fmt2(y) + "\" width=\"" +
             fmt2(w) + "\" height=\"" + fmt2(h) + "\"";
    if (rounded) body_ += " rx=\"14.00\"";
    body_ += std::string(" fill=\"") + fill + "\" stroke=\"black\"/>\n";
  }
  void line(double x1, double y1, double x2, double y2, double width = 1.5) {
    body_ += "  <line x1=\"" + fmt2(x1) + "\" y1=\"" + fmt2(y1) + "\" x2=\"" +
             fmt2(x2) + "\" y2=\"" + fmt2(y2) + "\" stroke=\"black\" " +
             "stroke-width=\"" + fmt2(width) + "\"/>\n";
  }
  void polygon(const std::vector<Vec2>& pts, const char* fill) {
    body_ += "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) body_ += ' ';
      body_ += fmt2(pts[i].x) + "," + fmt2(pts[i].y);
    }
    body_ += std::string("\" fill=\"") + fill + "\" stroke=\"black\"/>\n";
  }
  void text(double x, double y, const std::string& content, bool centered) {
    body_ += "  <text x=\"" + fmt2(x) + "\" y=\"" + fmt2(y) + "\"";
    if (centered) body_ += " text-anchor=\"middle\"";
    body_ += " font-family=\"monospace\" font-size=\"13\">" + content +
             "</text>\n";
  }

  std::string document(int width, int height) const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
       << " " << height << "\">\n"
       << body_ << "</svg>\n";
    return os.str();
  }

 private:
  std::string body_;
};

void draw_arrow(SvgWriter& svg, double cx, double cy, Vec2 dir, double width) {
  const Vec2 tip{cx + dir.x * 16, cy + dir.y * 16};
  const Vec2 tail{cx - dir.x * 16, cy - dir.y * 16};
  const Vec2 base{tip.x - dir.x * 8, tip.y - dir.y * 8};
  const Vec2 perp{-dir.y, dir.x};
  svg.line(tail.x, tail.y, base.x, base.y, width);
  svg.polygon({tip,
               {base.x + perp.x * 5, base.y + perp.y * 5},
               {base.x - perp.x * 5, base.y - perp.y * 5}},
              "black");
}

void draw_shape(SvgWriter& svg, const ShapeSpec& s, double cx, double cy) {
  const bool white = !s.orientation.is_negative();
  const char* fill = white ? "white" : "black";
  switch (s.kind) {
    case ShapeKind::dot:
      svg.circle(cx, cy, 9, fill);
      return;
    case ShapeKind::arrow:
      draw_arrow(svg, cx, cy, axis_dir2(s.axes().front(), white), 1.5);
      return;
    case ShapeKind::square:
      svg.rect(cx - 13, cy - 13, 26, 26, fill);
      return;
    case ShapeKind::edge:
      draw_arrow(svg, cx, cy, axis_dir3(s.axes().front(), white), 2.0);
      return;
    case ShapeKind::wall: {
      const auto axes = s.axes();
      const Vec2 ua = axis_dir3(axes[0], true);
      const Vec2 ub = axis_dir3(axes[1], true);
      const double r = 11;
      svg.polygon({{cx - (ua.x + ub.x) * r, cy - (ua.y + ub.y) * r},
                   {cx + (ua.x - ub.x) * r, cy + (ua.y - ub.y) * r},
                   {cx + (ua.x + ub.x) * r, cy + (ua.y + ub.y) * r},
                   {cx - (ua.x - ub.x) * r, cy - (ua.y - ub.y) * r}},
                  fill);
      return;
    }
    case ShapeKind::cube: {
      const double r = 15;
      const Vec2 top{cx, cy - r};
      const Vec2 upper_left{cx - 0.866 * r, cy - 0.5 * r};
      const Vec2 lower_left{cx - 0.866 * r, cy + 0.5 * r};
      const Vec2 bottom{cx, cy + r};
      const Vec2 lower_right{cx + 0.866 * r, cy + 0.5 * r};
      const Vec2 upper_right{cx + 0.866 * r, cy - 0.5 * r};
      svg.polygon({top, upper_left, lower_left, bottom, lower_right,
                   upper_right},
                  fill);
      svg.line(cx, cy, upper_left.x, upper_left.y, 1.0);
      svg.line(cx, cy, upper_right.x, upper_right.y, 1.0);
      svg.line(cx, cy, bottom.x, bottom.y, 1.0);
      return;
    }
  }
}

}  // namespace

std::vector<int> ShapeSpec::axes() const {
  std::vector<int> out;
  for (int k = 0; k < 32; ++k) {
    if ((blade_mask >> k) & 1u) out.push_back(k + 1);
  }
  return out;
}

std::vector<ShapeSpec> bag_of_shapes(const Multivector& x) {
  if (x.dim() != 2 && x.dim() != 3) {
    std::ostringstream os;
    os << "bag rendering supports dim 2 and 3, got dim " << x.dim();
    throw RenderError(os.str());
  }
  std::vector<ShapeSpec> shapes;
  shapes.reserve(x.term_count());
  for (const auto& [mask, c] : x.terms()) {
    if (!(std::isfinite(c) && c == std::rint(c))) {
      throw RenderError("bag rendering requires integer coefficients");
    }
    if (std::abs(c) > kCoeffDrawLimit) {
      throw RenderError("coefficient magnitude too large to draw");
    }
    shapes.push_back(ShapeSpec{
        kind_for(x.dim(), std::popcount(mask)),
        c > 0 ? Sign::positive() : Sign::negative(),
        mask,
        static_cast<int>(std::abs(c)),
    });
  }
  return shapes;
}

std::string render_ascii(const std::vector<ShapeSpec>& shapes) {
  std::vector<std::string> lines;
  if (shapes.empty()) {
    lines.push_back("(empty bag)");
  } else {
    const std::vector<Row> rows = group_by_kind(shapes);
    std::size_t label_width = 0;
    for (const Row& row : rows) {
      label_width = std::max(label_width, std::string(kind_label(row.kind)).size());
    }
    for (const Row& row : rows) {
      std::string label = kind_label(row.kind);
      label.resize(label_width, ' ');
      std::string line = label + " : ";
      bool first = true;
      for (const ShapeSpec* s : row.shapes) {
        const std::string token = ascii_token(*s);
        const int copies = s->multiplicity > kMaxRepeatedShapes ? 1 : s->multiplicity;
        for (int i = 0; i < copies; ++i) {
          if (!first) line += ' ';
          line += token;
          first = false;
        }
        if (s->multiplicity > kMaxRepeatedShapes) {
          line += " x" + std::to_string(s->multiplicity);
        }
      }
      lines.push_back(std::move(line));
    }
  }

  std::size_t width = 0;
  for (const std::string& line : lines) width = std::max(width, line.size());

  std::string out = "+" + std::string(width + 2, '-') + "+\n";
  for (std::string line : lines) {
    line.resize(width, ' ');
    out += "| " + line + " |\n";
  }
  out += "+" + std::string(width + 2, '-') + "+\n";
  return out;
}

std::string render_svg(const std::vector<ShapeSpec>& shapes) {
  constexpr int kMargin = 18;
  constexpr int kLabelWidth = 72;
  constexpr int kCell = 52;

  SvgWriter svg;

  if (shapes.empty()) {
    const int width = 220;
    const int height = 88;
    svg.rect(6, 6, width - 12, height - 12, "none", true);
    svg.text(width / 2.0, height / 2.0 + 4, "empty bag", true);
    return svg.document(width, height);
  }

  const std::vector<Row> rows = group_by_kind(shapes);
  std::size_t max_cells = 1;
  for (const Row& row : rows) {
    std::size_t cells = 0;
    for (const ShapeSpec* s : row.shapes) {
      if (s->multiplicity > kMaxRepeatedShapes) {
        cells += 2;  // one shape plus the count label
      } else {
        cells += static_cast<std::size_t>(s->multiplicity);
      }
    }
    max_cells = std::max(max_cells, cells);
  }

  const int width =
      2 * kMargin + kLabelWidth + static_cast<int>(max_cells) * kCell;
  const int height = 2 * kMargin + static_cast<int>(rows.size()) * kCell;
  svg.rect(6, 6, width - 12, height - 12, "none", true);

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double cy = kMargin + (static_cast<double>(r) + 0.5) * kCell;
    svg.text(kMargin, cy + 4, kind_label(rows[r].kind), false);
    std::size_t cell = 0;
    for (const ShapeSpec* s : rows[r].shapes) {
      const int copies =
          s->multiplicity > kMaxRepeatedShapes ? 1 : s->multiplicity;
      for (int i = 0; i < copies; ++i) {
        const double cx =
            kMargin + kLabelWidth + (static_cast<double>(cell) + 0.5) * kCell;
        draw_shape(svg, *s, cx, cy);
        ++cell;
      }
      if (s->multiplicity > kMaxRepeatedShapes) {
        const double cx = kMargin + kLabelWidth + static_cast<double>(cell) * kCell;
        svg.text(cx + 4, cy + 4, "x " + std::to_string(s->multiplicity), false);
        ++cell;
      }
    }
  }
  return svg.document(width, height);
}

std::string render_ascii(const Multivector& x) {
  return render_ascii(bag_of_shapes(x));
}

std::string render_svg(const Multivector& x) {
  return render_svg(bag_of_shapes(x));
}

}  // namespace gablade
