// Command-line driver: dimension tables, basis export, invariant suites,
// theorem verification, and a small expression evaluator.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "emkv/dk.hpp"
#include "emkv/edk.hpp"
#include "emkv/spaces.hpp"
#include "emkv/suites.hpp"
#include "json.hpp"

namespace {

using namespace emkv;

std::string default_cache_dir() {
  if (const char* env = std::getenv("EMKV_CACHE_DIR")) return env;
  return ".emkv-cache";
}

nlohmann::json subspace_json(const GradedSubspace& s, const std::string& hash) {
  nlohmann::json j;
  j["tag"] = tag_name(s.tag);
  j["degree"] = s.degree;
  j["ambient_dim"] = s.ambient_dim;
  j["basis"] = nlohmann::json::array();
  for (const auto& vec : s.basis) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : vec) coords.push_back(c.str());
    j["basis"].push_back(nlohmann::json{{"coords", coords}});
  }
  j["residue_hash"] = hash;
  if (s.below_theorem_range) j["below_theorem_range"] = true;
  return j;
}

int cmd_dims(Solver& solver, const std::string& space, int max_degree, const std::string& format) {
  auto tag = tag_from_name(space);
  if (!tag) {
    std::cerr << "unknown space tag: " << space << "\n";
    return 2;
  }
  if (format == "json") {
    nlohmann::json j;
    j["space"] = space;
    j["residue_hash"] = solver.residue_hash();
    j["dims"] = nlohmann::json::array();
    for (int d = 1; d <= max_degree; ++d) {
      GradedSubspace s = solver.solve(*tag, d);
      nlohmann::json entry{{"degree", d}, {"dim", s.dim()}};
      if (s.below_theorem_range) entry["below_theorem_range"] = true;
      j["dims"].push_back(entry);
    }
    std::cout << j.dump(1) << "\n";
  } else {
    std::cout << "space " << space << " (residue hash " << solver.residue_hash() << ")\n";
    std::cout << "degree  dim\n";
    for (int d = 1; d <= max_degree; ++d) {
      GradedSubspace s = solver.solve(*tag, d);
      std::printf("%-7d %d%s\n", d, s.dim(),
                  s.below_theorem_range ? "   (below theorem range)" : "");
    }
  }
  return 0;
}

int cmd_basis(Solver& solver, const std::string& space, int degree) {
  auto tag = tag_from_name(space);
  if (!tag) {
    std::cerr << "unknown space tag: " << space << "\n";
    return 2;
  }
  GradedSubspace s = solver.solve(*tag, degree);
  std::cout << subspace_json(s, solver.residue_hash()).dump(1) << "\n";
  return 0;
}

int cmd_check(Solver& solver, const std::string& suite, uint64_t seed) {
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == suite;
  if (!known) {
    std::cerr << "unknown suite: " << suite << "\n";
    return 2;
  }
  SuiteResult r = run_suite(suite, seed, solver);
  std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
  return r.passed ? 0 : 1;
}

int cmd_verify(Solver& solver, int max_degree) {
  TheoremReport report = verify_main_theorem(max_degree, solver);
  std::cout << "main theorem, degrees 2.." << max_degree << " (residue hash "
            << solver.residue_hash() << ")\n";
  for (const auto& d : report.degrees) {
    std::cout << "degree " << d.degree << ": dim grt1em = " << d.dim_grt1em
              << ", dim krv2sym = " << d.dim_krv2sym << (d.dims_equal ? "" : "  MISMATCH")
              << "; images sym-fixed " << (d.images_sym_fixed ? "yes" : "NO")
              << ", krv members " << (d.images_krv_member ? "yes" : "NO") << ", basis "
              << (d.images_form_basis ? "yes" : "NO") << "; grt1 (dim " << d.dim_grt1
              << ") maps in " << (d.grt1_injects ? "yes" : "NO") << "\n";
  }
  std::cout << (report.all_ok() ? "all degree checks passed\n" : "FAILURES present\n");
  return report.all_ok() ? 0 : 1;
}

// --- tiny expression language: x | y | [e,e] | R(e) | nu(e) | nu_em(e) |
//     div(e) | residues(e) ---

struct EvalValue {
  std::variant<LiePoly, NCPoly, TangentialDerivation, TracePoly> v;
};

class ExprParser {
 public:
  explicit ExprParser(std::string text) : text_(std::move(text)) {}

  EvalValue parse() {
    EvalValue v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw std::invalid_argument("trailing input in expression");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw std::invalid_argument(std::string("expected '") + c + "'");
  }

  EvalValue expr() {
    skip_ws();
    if (eat('[')) {
      EvalValue a = expr();
      expect(',');
      EvalValue b = expr();
      expect(']');
      auto* la = std::get_if<LiePoly>(&a.v);
      auto* lb = std::get_if<LiePoly>(&b.v);
      if (!la || !lb) throw std::invalid_argument("bracket expects Lie operands");
      return {bracket(*la, *lb)};
    }
    std::string name = ident();
    if (name == "x") return {LiePoly::gen(2, 0)};
    if (name == "y") return {LiePoly::gen(2, 1)};
    expect('(');
    EvalValue arg = expr();
    expect(')');
    if (name == "R") {
      auto* l = std::get_if<LiePoly>(&arg.v);
      if (!l) throw std::invalid_argument("R expects a Lie operand");
      return {r_map(*l)};
    }
    if (name == "nu" || name == "nu_em") {
      auto* l = std::get_if<LiePoly>(&arg.v);
      if (!l) throw std::invalid_argument(name + " expects a Lie operand");
      return {name == "nu" ? nu(*l) : nu_em(*l)};
    }
    if (name == "div") {
      auto* t = std::get_if<TangentialDerivation>(&arg.v);
      if (!t) throw std::invalid_argument("div expects a tangential derivation");
      return {div(*t)};
    }
    if (name == "residues") {
      auto* l = std::get_if<LiePoly>(&arg.v);
      if (!l) throw std::invalid_argument("residues expects a Lie operand");
      GrtEmResidues r = emergent_defects(*l);
      // Folded into a plain printout; handled by the caller through str().
      residues_out_ = "(" + r.pentagon_lie.str() + ", " + r.pentagon_word.str() + ", " +
                      r.symmetry.str() + ")";
      return {LiePoly(2)};
    }
    throw std::invalid_argument("unknown operation: " + name);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) throw std::invalid_argument("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  std::string text_;
  size_t pos_ = 0;

 public:
  std::optional<std::string> residues_out_;
};

int cmd_eval(const std::string& text) {
  try {
    ExprParser parser(text);
    EvalValue v = parser.parse();
    if (parser.residues_out_) {
      std::cout << *parser.residues_out_ << "\n";
      return 0;
    }
    std::visit([](const auto& val) { std::cout << val.str() << "\n"; }, v.v);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "eval error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the emergent Drinfeld-Kohno and Kashiwara-Vergne setting"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_dir = default_cache_dir();
  uint64_t seed = 0;
  app.add_option("--cache-dir", cache_dir, "Basis cache directory (env EMKV_CACHE_DIR)");
  app.add_option("--seed", seed, "Seed for the randomized suites");

  std::string space, format = "table", suite, expr_text;
  int max_degree = 8, degree = 1;

  CLI::App* dims = app.add_subcommand("dims", "Dimension table of a graded space");
  dims->add_option("--space", space, "Space tag")->required();
  dims->add_option("--max-degree", max_degree, "Maximum degree");
  dims->add_option("--format", format, "table or json");

  CLI::App* basis = app.add_subcommand("basis", "JSON basis of a graded space at one degree");
  basis->add_option("tag", space, "Space tag")->required();
  basis->add_option("degree", degree, "Degree")->required();

  CLI::App* check = app.add_subcommand("check", "Run a named invariant suite");
  check->add_option("suite", suite, "Suite name")->required();

  CLI::App* verify = app.add_subcommand("verify-theorem", "Degree-by-degree theorem verification");
  verify->add_option("--max-degree", max_degree, "Maximum degree");

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a small expression");
  eval_cmd->add_option("expr", expr_text, "Expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Solver solver(cache_dir);
    if (dims->parsed()) return cmd_dims(solver, space, max_degree, format);
    if (basis->parsed()) return cmd_basis(solver, space, degree);
    if (check->parsed()) return cmd_check(solver, suite, seed);
    if (verify->parsed()) return cmd_verify(solver, max_degree);
    if (eval_cmd->parsed()) return cmd_eval(expr_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
