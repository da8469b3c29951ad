#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gablade/dj.hpp"
#include "gablade/expr.hpp"
#include "gablade/render.hpp"
#include "gablade/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftestFailure = 1;
constexpr int kExitUserError = 2;
constexpr int kExitIoError = 3;

bool use_color() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

const char* color_green() { return use_color() ? "\x1b[32m" : ""; }
const char* color_red() { return use_color() ? "\x1b[31m" : ""; }
const char* color_reset() { return use_color() ? "\x1b[0m" : ""; }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gablade::IoError("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw gablade::IoError("failed writing '" + path + "'");
}

struct EvalArgs {
  std::string expr;
  int dim = 2;
  std::string output = "text";
};

struct DjArgs {
  int bits = 1;
  std::string function;
  bool show_stages = false;
  std::string render_spec;
  std::string output = "text";
};

struct RenderArgs {
  std::string expr;
  int dim = 2;
  std::string format = "ascii";
  std::string out_path;
};

int run_eval(const EvalArgs& args) {
  const gablade::Multivector x = gablade::evaluate(args.expr, args.dim);
  if (args.output == "json") {
    std::cout << x.to_json().dump() << '\n';
  } else if (args.output == "glyph") {
    std::cout << gablade::format(x, gablade::FormatStyle::glyph) << '\n';
  } else {
    std::cout << x.to_string() << '\n';
  }
  return kExitOk;
}

nlohmann::json outcome_json(const gablade::DJOutcome& outcome) {
  nlohmann::json j{{"classification", to_string(outcome.classification)},
                   {"scalar_witness", outcome.scalar_witness}};
  if (outcome.constant_value.has_value()) {
    j["constant_value"] = *outcome.constant_value;
  } else {
    j["constant_value"] = nullptr;
  }
  return j;
}

int run_dj(const DjArgs& args) {
  const gablade::BooleanFunction f =
      gablade::BooleanFunction::from_spec(args.bits, args.function);

  const auto start = std::chrono::steady_clock::now();
  const gablade::DJStages stages = gablade::run_dj_stages(f);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();

  if (!args.render_spec.empty()) {
    constexpr std::string_view kSvgPrefix = "svg:";
    if (!args.render_spec.starts_with(kSvgPrefix)) {
      throw gablade::ValueError("--render expects svg:<path>");
    }
    const std::string path(args.render_spec.substr(kSvgPrefix.size()));
    if (path.empty()) throw gablade::ValueError("--render expects svg:<path>");
    write_file(path, gablade::render_svg(stages.final_bag));
  }

  if (args.output == "json") {
    nlohmann::json j = outcome_json(stages.outcome);
    j["n"] = f.n();
    j["function"] = f.table_string();
    j["time_ms"] = elapsed_ms;
    if (args.show_stages) {
      j["stages"] = {{"first_step", stages.after_first_step.to_json()},
                     {"after_oracle", stages.after_oracle.to_json()},
                     {"final_bag", stages.final_bag.to_json()}};
    }
    std::cout << j.dump() << '\n';
    return kExitOk;
  }

  std::cout << "input: n=" << f.n() << ", f=" << args.function << '\n';
  std::cout << "table: " << f.table_string() << '\n';
  if (args.show_stages) {
    std::cout << "stage E*e_n       : " << stages.after_first_step.to_string()
              << '\n';
    std::cout << "stage after-oracle: " << stages.after_oracle.to_string()
              << '\n';
    std::cout << "stage after-F     : " << stages.final_bag.to_string()
              << '\n';
    std::cout << "stage scalar-part : " << stages.outcome.scalar_witness
              << '\n';
  }
  std::cout << "classification: " << color_green()
            << to_string(stages.outcome.classification) << color_reset();
  if (stages.outcome.constant_value.has_value()) {
    std::cout << " (f(0...0) = " << *stages.outcome.constant_value << ")";
  }
  std::cout << '\n';
  std::cout << "scalar_witness: " << stages.outcome.scalar_witness << '\n';
  std::cout << "time_ms: " << elapsed_ms << '\n';
  return kExitOk;
}

int run_render(const RenderArgs& args) {
  const gablade::Multivector x = gablade::evaluate(args.expr, args.dim);
  const std::string doc = args.format == "svg" ? gablade::render_svg(x)
                                               : gablade::render_ascii(x);
  if (args.out_path.empty()) {
    std::cout << doc;
  } else {
    write_file(args.out_path, doc);
  }
  return kExitOk;
}

int run_selftest() {
  const std::vector<gablade::SuiteResult> results = gablade::run_selftest();
  bool all_passed = true;
  for (const gablade::SuiteResult& r : results) {
    if (r.passed) {
      std::cout << color_green() << "ok  " << color_reset() << r.name << ": "
                << r.checks << " checks\n";
    } else {
      all_passed = false;
      std::cout << color_red() << "FAIL" << color_reset() << ' ' << r.name
                << ": " << r.counterexample << '\n';
    }
  }
  std::cout << (all_passed ? "selftest: all suites passed"
                           : "selftest: FAILURES above")
            << '\n';
  return all_passed ? kExitOk : kExitSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact geometric-algebra calculator: blade products over bitmask "
      "indices, the Deutsch-Jozsa pipeline without qubits, and bag-of-shapes "
      "diagrams."};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "Parse and evaluate a blade expression");
  eval_cmd->footer(
      "Grammar: numbers (2, 0.5), blade literals (1 is the scalar blade; "
      "e12 or e{1,2} or eb110010), dim-2 glyphs (WDOT BDOT RIGHT LEFT UP "
      "DOWN WSQ BSQ, unicode aliases accepted), parentheses, rev(x), "
      "grade(x, k), scalar(x).\n"
      "Precedence, tightest first: unary minus and postfix ~ (reversion), "
      "then *, then binary + and -. '*' is mandatory: juxtaposition is not "
      "multiplication, except that a number directly before a blade literal "
      "is its coefficient (3 e{1,2}).");
  eval_cmd->add_option("expr", eval_args.expr, "Expression, e.g. \"e1 * e2\"")
      ->required();
  eval_cmd->add_option("--dim", eval_args.dim, "Algebra dimension")
      ->check(CLI::Range(1, gablade::kMaxDim))
      ->capture_default_str();
  eval_cmd->add_option("--output", eval_args.output, "Output form")
      ->check(CLI::IsMember({"text", "json", "glyph"}))
      ->capture_default_str();

  DjArgs dj_args;
  CLI::App* dj_cmd = app.add_subcommand(
      "dj", "Classify a boolean function with the geometric-product pipeline");
  dj_cmd->add_option("--bits", dj_args.bits, "Number of input bits n")
      ->check(CLI::Range(1, gablade::kMaxInputBits))
      ->required();
  dj_cmd
      ->add_option("--function", dj_args.function,
                   "Truth table over {0,1}, most-significant input bit first "
                   "(f(0..0) is the first character), or constant0, "
                   "constant1, balanced:parity, balanced:tophalf, "
                   "balanced:random?seed=<u64>")
      ->required();
  dj_cmd->add_flag("--show-stages", dj_args.show_stages,
                   "Print the intermediate bags of the pipeline");
  dj_cmd->add_option("--render", dj_args.render_spec,
                     "Write the final bag as a diagram, svg:<path>");
  dj_cmd->add_option("--output", dj_args.output, "Output form")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  RenderArgs render_args;
  CLI::App* render_cmd =
      app.add_subcommand("render", "Draw an expression as a bag of shapes");
  render_cmd->add_option("expr", render_args.expr, "Expression to draw")
      ->required();
  render_cmd->add_option("--dim", render_args.dim, "Algebra dimension (2 or 3)")
      ->check(CLI::Range(2, 3))
      ->capture_default_str();
  render_cmd->add_option("--format", render_args.format, "Diagram format")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  render_cmd->add_option("--out", render_args.out_path,
                         "Output file (stdout when omitted)");

  CLI::App* selftest_cmd = app.add_subcommand(
      "selftest", "Run the built-in verification suites at small dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args);
    if (dj_cmd->parsed()) return run_dj(dj_args);
    if (render_cmd->parsed()) return run_render(render_args);
    if (selftest_cmd->parsed()) return run_selftest();
  } catch (const gablade::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const gablade::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUserError;
  } catch (const gablade::EvalError& e) {
    std::cerr << e.what() << '\n';
    return kExitUserError;
  } catch (const gablade::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUserError;
  }
  return kExitOk;
}
