// Command-line driver: validation, operators, enumeration, embeddings, the
// ultra-discretized crystal, tropical expressions and the acceptance suites.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "d6spin/coherent.hpp"
#include "d6spin/crystal.hpp"
#include "d6spin/explorer.hpp"
#include "d6spin/io.hpp"
#include "d6spin/tropical.hpp"
#include "d6spin/ud.hpp"
#include "d6spin/verify.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitNone = 2;
constexpr int kExitError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

d6::LoadedElement load(const std::string& path, const std::string& level) {
  d6::LoadedElement e = d6::element_from_json(read_file(path));
  if (!level.empty()) e.level = d6::Level::parse(level);
  return e;
}

struct Step {
  d6::Op op;
  int k;
};

std::vector<Step> parse_word(const std::string& word) {
  std::vector<Step> steps;
  std::stringstream ss(word);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.size() != 2 || (tok[0] != 'e' && tok[0] != 'f') || tok[1] < '0' || tok[1] > '6')
      throw std::invalid_argument("bad operator '" + tok + "' (expected e0..e6 or f0..f6)");
    steps.push_back({tok[0] == 'e' ? d6::Op::E : d6::Op::F, tok[1] - '0'});
  }
  if (steps.empty()) throw std::invalid_argument("empty operator word");
  return steps;
}

d6::trop::TropExpr load_expr(const std::string& path, bool rational) {
  const std::string text = read_file(path);
  return rational ? d6::trop::tropicalize(d6::trop::parse_rational(text))
                  : d6::trop::parse_tropical(text);
}

void require_valid(const d6::Element& b, const d6::Level& level, const std::string& what) {
  const auto v = d6::validate(b, level);
  if (v.empty()) return;
  throw std::invalid_argument(what + " fails " + v.front().describe() + " at level " +
                              level.to_string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore the spin-node perfect crystals of type D_6^(1)"};
  app.require_subcommand(1);

  std::string level, in, word, b0_path, dot_path, json_path, expr1, expr2, suite = "all";
  std::int64_t lvl = 1, k = 0, c = 0, box = 50;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
  bool rational = false;
  std::vector<std::string> bindings;

  auto* validate =
      app.add_subcommand("validate", "Check an element against the defining constraints");
  validate->add_option("--level", level, "l or inf (overrides the file)");
  validate->add_option("--in", in, "element JSON")->required();

  auto* apply = app.add_subcommand("apply", "Apply a word of Kashiwara operators, leftmost first");
  apply->add_option("--level", level, "l or inf (overrides the file)");
  apply->add_option("--word", word, "comma-separated operators such as e0,f3,f3,e5")->required();
  apply->add_option("--in", in, "element JSON")->required();

  auto* stats = app.add_subcommand("stats", "Print epsilon, phi and the weight");
  stats->add_option("--level", level, "l or inf (overrides the file)");
  stats->add_option("--in", in, "element JSON")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List B^{6,l}");
  enumerate->add_option("--level", lvl, "l >= 0")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--dot", dot_path, "write the crystal graph in DOT form");
  enumerate->add_option("--json", json_path, "write the elements as a JSON array");

  auto* minimal = app.add_subcommand("minimal", "List the minimal elements of B^{6,l}");
  minimal->add_option("--level", lvl, "l >= 1")->required()->check(CLI::PositiveNumber);

  auto* embed = app.add_subcommand("embed", "Embed an element of B^{6,l} into B^{6,inf}");
  embed->add_option("--level", lvl, "l >= 1")->required()->check(CLI::PositiveNumber);
  embed->add_option("--b0", b0_path, "minimal element JSON")->required();
  embed->add_option("--in", in, "element JSON")->required();

  auto* decompose =
      app.add_subcommand("decompose", "Split an element of B^{6,inf} as an embedding");
  decompose->add_option("--in", in, "element JSON")->required();

  auto* omega = app.add_subcommand("omega", "Map an element of B^{6,inf} to Z^15");
  omega->add_option("--in", in, "element JSON")->required();

  auto* omega_inv = app.add_subcommand("omega-inv", "Map a point of Z^15 to B^{6,inf}");
  omega_inv->add_option("--in", in, "point JSON")->required();

  auto* ud_apply = app.add_subcommand("ud-apply", "Apply e_k^c to a point of Z^15");
  ud_apply->add_option("--k", k, "node 0..6")->required()->check(CLI::Range(0, 6));
  ud_apply->add_option("--c", c, "integer parameter")->required();
  ud_apply->add_option("--in", in, "point JSON")->required();

  auto* trop = app.add_subcommand("trop", "Evaluate or compare max-plus expressions");
  trop->require_subcommand(1);
  auto* trop_eval = trop->add_subcommand("eval", "Evaluate an expression");
  auto* trop_equiv = trop->add_subcommand("equiv", "Compare two expressions by sampling");
  for (auto* sub : {trop_eval, trop_equiv}) {
    sub->add_option("--expr", expr1, "expression file")->required();
    sub->add_flag("--rational", rational,
                  "files hold positive rational expressions to tropicalize");
  }
  trop_eval->add_option("--var", bindings, "name=value, repeatable");
  trop_equiv->add_option("--expr2", expr2, "second expression file")->required();
  trop_equiv->add_option("--box", box, "sample in [-N, N]")->check(CLI::NonNegativeNumber);
  trop_equiv->add_option("--trials", trials, "uniform samples");
  trop_equiv->add_option("--seed", seed, "random seed");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suites");
  verify->add_option("--suite", suite, "crystal, coherent, ud, iso or all")
      ->check(CLI::IsMember({"crystal", "coherent", "ud", "iso", "all"}));
  verify->add_option("--seed", seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const auto e = load(in, level);
      const auto v = d6::validate(e.b, e.level);
      for (const auto& x : v) std::cerr << x.describe() << '\n';
      std::cout << (v.empty() ? "valid" : "invalid") << '\n';
      return v.empty() ? 0 : kExitInvalid;
    }
    if (apply->parsed()) {
      auto e = load(in, level);
      require_valid(e.b, e.level, "input");
      for (const auto& s : parse_word(word)) {
        const auto next = d6::apply(e.b, e.level, s.op, s.k);
        if (!next) {
          std::cout << "none\n";
          return kExitNone;
        }
        e.b = *next;
      }
      std::cout << d6::element_to_json(e.b, e.level) << '\n';
      return 0;
    }
    if (stats->parsed()) {
      const auto e = load(in, level);
      require_valid(e.b, e.level, "input");
      std::cout << d6::stats_to_json(e.b, e.level) << '\n';
      return 0;
    }
    if (enumerate->parsed()) {
      const auto elems = d6::enumerate_level(lvl);
      const auto spec = d6::Level::finite(lvl);
      if (!json_path.empty()) write_file(json_path, d6::elements_to_json(elems, spec));
      if (!dot_path.empty()) write_file(dot_path, d6::export_dot(d6::build_graph(elems, spec)));
      std::cout << elems.size() << '\n';
      return 0;
    }
    if (minimal->parsed()) {
      std::cout << d6::minimal_set_to_json(lvl) << '\n';
      return 0;
    }
    if (embed->parsed()) {
      const auto b0 = d6::element_from_json(read_file(b0_path)).b;
      const auto b = d6::element_from_json(read_file(in)).b;
      std::cout << d6::element_to_json(d6::embed(lvl, b0, b), d6::Level::infinity()) << '\n';
      return 0;
    }
    if (decompose->parsed()) {
      const auto b = d6::element_from_json(read_file(in)).b;
      std::cout << d6::decomposition_to_json(d6::decompose(b)) << '\n';
      return 0;
    }
    if (omega->parsed()) {
      const auto b = d6::element_from_json(read_file(in)).b;
      require_valid(b, d6::Level::infinity(), "input");
      std::cout << d6::point_to_json(d6::omega(b)) << '\n';
      return 0;
    }
    if (omega_inv->parsed()) {
      const auto x = d6::point_from_json(read_file(in));
      std::cout << d6::element_to_json(d6::omega_inv(x), d6::Level::infinity()) << '\n';
      return 0;
    }
    if (ud_apply->parsed()) {
      const auto x = d6::point_from_json(read_file(in));
      std::cout << d6::point_to_json(d6::apply_ec(x, static_cast<int>(k), c)) << '\n';
      return 0;
    }
    if (trop_eval->parsed()) {
      const auto e = load_expr(expr1, rational);
      d6::trop::Assignment a;
      for (const auto& bind : bindings) {
        const auto eq = bind.find('=');
        if (eq == std::string::npos)
          throw std::invalid_argument("expected name=value, got " + bind);
        a[bind.substr(0, eq)] = std::stoll(bind.substr(eq + 1));
      }
      std::cout << d6::trop::eval(e, a) << '\n';
      return 0;
    }
    if (trop_equiv->parsed()) {
      const auto e1 = load_expr(expr1, rational);
      const auto e2 = load_expr(expr2, rational);
      const auto r = d6::trop::check_equiv(e1, e2, d6::trop::Box{-box, box}, trials, seed);
      if (r.equal) {
        std::cout << "equal (" << r.samples << " samples)\n";
        return 0;
      }
      std::cout << "counterexample:";
      for (const auto& [name, v] : r.counterexample) std::cout << ' ' << name << '=' << v;
      std::cout << '\n';
      return kExitInvalid;
    }
    if (verify->parsed()) {
      bool ok = true;
      for (const auto& r : d6::run_suite(d6::parse_suite(suite), seed)) {
        std::cout << d6::format_result(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? 0 : kExitInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
