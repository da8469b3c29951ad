#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gablade/canonical.hpp"
#include "gablade/dj.hpp"
#include "gablade/expr.hpp"
#include "gablade/render.hpp"
#include "gablade/selftest.hpp"

namespace py = pybind11;
using namespace gablade;

namespace {

FormatStyle style_from_string(const std::string& style) {
  if (style == "algebraic") return FormatStyle::algebraic;
  if (style == "glyph") return FormatStyle::glyph;
  throw ValueError("style must be 'algebraic' or 'glyph'");
}

}  // namespace

PYBIND11_MODULE(gablade, m) {
  m.doc() =
      "Exact geometric-algebra engine: blades as bitmasks, sparse "
      "multivectors, the Deutsch-Jozsa pipeline without qubits, a blade "
      "expression language, and bag-of-shapes diagrams.";
  m.attr("__version__") = "0.1.0";
  m.attr("MAX_DIM") = kMaxDim;
  m.attr("MAX_INPUT_BITS") = kMaxInputBits;

  const auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<DimensionError>(m, "DimensionError", error.ptr());
  py::register_exception<RenderError>(m, "RenderError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<EvalError>(m, "EvalError", error.ptr());

  py::class_<BladeIndex>(m, "BladeIndex",
                         "Basis blade identified by a bitmask; bit k set "
                         "means e_{k+1} is a factor.")
      .def(py::init<std::uint32_t, int>(), py::arg("mask"), py::arg("dim"))
      .def_static("scalar", &BladeIndex::scalar, py::arg("dim"))
      .def_static("basis_vector", &BladeIndex::basis_vector, py::arg("k"),
                  py::arg("dim"))
      .def_static("pseudoscalar", &BladeIndex::pseudoscalar, py::arg("dim"))
      .def_property_readonly("mask", &BladeIndex::mask)
      .def_property_readonly("dim", &BladeIndex::dim)
      .def("grade", [](const BladeIndex& b) { return grade(b); })
      .def("mask_bits", [](const BladeIndex& b) { return mask_bits(b); })
      .def(py::self == py::self)
      .def("__hash__",
           [](const BladeIndex& b) {
             return std::hash<std::uint64_t>{}(
                 (static_cast<std::uint64_t>(b.dim()) << 32) | b.mask());
           })
      .def("__repr__", [](const BladeIndex& b) { return format_blade(b); });

  m.def("blade_from_bits", &blade_from_bits, py::arg("bits"),
        "Blade from a written bit word, e.g. '110010'.");
  m.def("grade", [](const BladeIndex& b) { return grade(b); }, py::arg("blade"));
  m.def(
      "product_sign",
      [](const BladeIndex& a, const BladeIndex& b) {
        return product_sign(a, b).value();
      },
      py::arg("a"), py::arg("b"), "Sign (+1/-1) of the blade product a*b.");
  m.def(
      "blade_product",
      [](const BladeIndex& a, const BladeIndex& b) {
        const SignedBlade r = blade_product(a, b);
        return py::make_tuple(r.sign.value(), r.blade);
      },
      py::arg("a"), py::arg("b"),
      "Geometric product of two blades: (sign, blade) with XORed masks.");
  m.def(
      "reversion_sign",
      [](const BladeIndex& b) { return reversion_sign(b).value(); },
      py::arg("blade"));

  py::class_<Multivector>(m, "Multivector",
                          "Sparse real linear combination of blades.")
      .def(py::init<int>(), py::arg("dim"))
      .def_static("from_blade", &Multivector::from_blade, py::arg("blade"),
                  py::arg("coeff"))
      .def_static("scalar", &Multivector::scalar, py::arg("dim"),
                  py::arg("value"))
      .def_static(
          "from_json",
          [](const std::string& text) { return Multivector::from_json_text(text); },
          py::arg("text"))
      .def_property_readonly("dim", &Multivector::dim)
      .def("is_zero", &Multivector::is_zero)
      .def("term_count", &Multivector::term_count)
      .def("terms",
           [](const Multivector& x) {
             py::dict d;
             for (const auto& [mask, c] : x.terms()) d[py::int_(mask)] = c;
             return d;
           },
           "Mask -> coefficient dictionary.")
      .def("term_list", &Multivector::term_list)
      .def("coeff", &Multivector::coeff, py::arg("blade"))
      .def("scalar_part", &Multivector::scalar_part)
      .def("has_integer_coeffs", &Multivector::has_integer_coeffs)
      .def("reversed", &Multivector::reversed)
      .def("grade_project", &Multivector::grade_project, py::arg("k"))
      .def("to_json", [](const Multivector& x) { return x.to_json().dump(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Multivector::to_string)
      .def("__repr__", &Multivector::to_string);

  m.def("evaluate",
        [](const std::string& src, int dim) { return evaluate(src, dim); },
        py::arg("src"), py::arg("dim"),
        "Parse and evaluate a blade expression at the given dimension.");
  m.def(
      "format",
      [](const Multivector& x, const std::string& style) {
        return format(x, style_from_string(style));
      },
      py::arg("x"), py::arg("style") = "algebraic",
      "Format a multivector, style 'algebraic' or 'glyph'.");

  py::enum_<DJClassification>(m, "DJClassification")
      .value("constant", DJClassification::constant)
      .value("balanced", DJClassification::balanced)
      .value("promise_violated", DJClassification::promise_violated);

  py::class_<DJOutcome>(m, "DJOutcome")
      .def_readonly("scalar_witness", &DJOutcome::scalar_witness)
      .def_readonly("classification", &DJOutcome::classification)
      .def_readonly("constant_value", &DJOutcome::constant_value)
      .def("__repr__", [](const DJOutcome& o) {
        return "DJOutcome(witness=" + std::to_string(o.scalar_witness) +
               ", classification=" + to_string(o.classification) + ")";
      });

  py::class_<BooleanFunction>(m, "BooleanFunction",
                              "Explicit truth table, index read "
                              "most-significant input bit first.")
      .def(py::init<int, std::vector<bool>>(), py::arg("n"), py::arg("table"))
      .def_static("from_spec", &BooleanFunction::from_spec, py::arg("n"),
                  py::arg("spec"))
      .def_static("constant", &BooleanFunction::constant, py::arg("n"),
                  py::arg("value"))
      .def_static("parity", &BooleanFunction::parity, py::arg("n"))
      .def_static("top_half", &BooleanFunction::top_half, py::arg("n"))
      .def_static("random_balanced", &BooleanFunction::random_balanced,
                  py::arg("n"), py::arg("seed"))
      .def_property_readonly("n", &BooleanFunction::n)
      .def("value_at_index", &BooleanFunction::value_at_index, py::arg("index"))
      .def("ones_count", &BooleanFunction::ones_count)
      .def("is_constant", &BooleanFunction::is_constant)
      .def("is_balanced", &BooleanFunction::is_balanced)
      .def("table_string", &BooleanFunction::table_string)
      .def("__repr__", [](const BooleanFunction& f) {
        return "BooleanFunction(n=" + std::to_string(f.n()) + ", table=" +
               f.table_string() + ")";
      });

  py::class_<DJStages>(m, "DJStages")
      .def_readonly("after_first_step", &DJStages::after_first_step)
      .def_readonly("after_oracle", &DJStages::after_oracle)
      .def_readonly("final_bag", &DJStages::final_bag)
      .def_readonly("outcome", &DJStages::outcome);

  m.def("build_E", &build_E, py::arg("m"),
        "Sum of all 2^m blades, coefficient +1.");
  m.def("probe_blade", &probe_blade, py::arg("m"));
  m.def("first_step", &first_step, py::arg("m"));
  m.def("apply_oracle", &apply_oracle, py::arg("f"), py::arg("x"));
  m.def("build_F", &build_F, py::arg("m"));
  m.def("run_dj", &run_dj, py::arg("f"),
        "Classify a boolean function with the geometric-product pipeline.");
  m.def("run_dj_stages", &run_dj_stages, py::arg("f"));

  m.def("render_ascii",
        [](const Multivector& x) { return render_ascii(x); }, py::arg("x"),
        "7-bit text diagram of a dim-2 or dim-3 integer bag.");
  m.def("render_svg", [](const Multivector& x) { return render_svg(x); },
        py::arg("x"), "Standalone SVG diagram of a dim-2 or dim-3 integer bag.");

  m.def("selftest", []() {
    py::list out;
    for (const SuiteResult& r : run_selftest()) {
      py::dict d;
      d["name"] = r.name;
      d["checks"] = r.checks;
      d["passed"] = r.passed;
      d["counterexample"] = r.counterexample;
      out.append(d);
    }
    return out;
  });
}
