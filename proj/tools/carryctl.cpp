// carryctl: command-line front end for the carry library.
//
// Inputs that name an ideal accept either an inline label ("p=5 d=25 c=(0,1)",
// with optional n=<n>), a path to an ideal file (text or JSON), or "-" for
// stdin. Every subcommand takes --json.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "carry/carry_pattern.hpp"
#include "carry/error.hpp"
#include "carry/fixtures.hpp"
#include "carry/gl2.hpp"
#include "carry/invariant_ideal.hpp"
#include "carry/io.hpp"
#include "carry/koszul.hpp"
#include "carry/mult_map.hpp"
#include "carry/two_variable.hpp"

namespace {

using carry::Int;
using nlohmann::json;

// Generator degree past which the Koszul path gets slow enough to warn about.
constexpr Int kKoszulWarnDegree = 400;

struct Input {
  carry::MonomialIdeal ideal;
  std::optional<carry::CarryIdealLabel> label;
};

bool looks_like_label(const std::string& s) {
  return s.find("d=") != std::string::npos && s.find("c=") != std::string::npos;
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw carry::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

carry::MonomialIdeal ideal_from_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    if (text.find("\"labels\"") != std::string::npos) {
      return carry::ideal_from_labels(carry::decomposition_from_json(text));
    }
    return carry::ideal_from_json(text);
  }
  // A ring header followed by "d=" lines is a decomposition file.
  if (text.find("d=") != std::string::npos) return carry::ideal_from_labels(carry::parse_decomposition(text));
  return carry::parse_ideal(text);
}

Input load_input(const std::string& spec) {
  if (looks_like_label(spec) && spec.find('\n') == std::string::npos && spec.find("p=") != std::string::npos) {
    auto label = carry::parse_label(spec);
    return {carry::carry_ideal(label), label};
  }
  return {ideal_from_text(read_source(spec)), std::nullopt};
}

json table_json(const carry::BettiTable& table) { return json::parse(carry::betti_to_json(table)); }

std::string betti_line(const carry::BettiTable& table) {
  std::string out;
  for (const auto& [key, value] : table.entries()) {
    out += "b" + std::to_string(key.first) + "," + std::to_string(key.second) + "=" + std::to_string(value) + " ";
  }
  return out + "reg=" + std::to_string(table.regularity());
}

json pattern_json(const carry::CarryPattern& c) { return c.entries(); }

struct Common {
  bool json = false;
};

void emit(const Common& common, const json& payload, const std::string& text) {
  if (common.json) {
    std::cout << payload.dump() << '\n';
  } else {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  }
  std::cout.flush();
}

carry::KoszulOptions koszul_options(std::optional<Int> max_degree) {
  carry::KoszulOptions options;
  options.max_degree = max_degree;
  return options;
}

// --- subcommands -----------------------------------------------------------

int cmd_enumerate(const Common& common, Int d, int n, Int p, bool dot) {
  const carry::Context ctx(n, p, d);
  const auto lattice = carry::carry_lattice(ctx);
  const auto covers = carry::hasse_covers(ctx);
  if (dot && !common.json) {
    std::cout << carry::hasse_dot(ctx);
    return 0;
  }
  json payload{{"n", n}, {"p", p}, {"d", d}, {"patterns", json::array()}, {"covers", json::array()}};
  std::string text;
  for (const auto& c : lattice) {
    payload["patterns"].push_back(pattern_json(c));
    text += carry::to_string(c) + '\n';
  }
  for (const auto& [lo, hi] : covers) {
    payload["covers"].push_back({pattern_json(lattice[lo]), pattern_json(lattice[hi])});
    text += "cover " + carry::to_string(lattice[lo]) + " < " + carry::to_string(lattice[hi]) + '\n';
  }
  if (dot) payload["dot"] = carry::hasse_dot(ctx);
  emit(common, payload, text);
  return 0;
}

int cmd_carry(const Common& common, Int p, const std::vector<Int>& exponents) {
  const carry::Ring ring(static_cast<int>(exponents.size()), p);
  const auto c = carry::carry_pattern(ring, exponents);
  emit(common, {{"n", ring.n()}, {"p", p}, {"d", c.degree()}, {"carry", pattern_json(c)}},
       "d=" + std::to_string(c.degree()) + " c=" + carry::to_string(c));
  return 0;
}

int cmd_decompose(const Common& common, const std::string& source) {
  const auto input = load_input(source);
  const auto decomposition = carry::decompose(input.ideal);
  const auto& ring = decomposition.ring();
  emit(common, json::parse(carry::decomposition_to_json(decomposition)),
       "ring n=" + std::to_string(ring.n()) + " p=" + std::to_string(ring.p()) + "\n" +
           carry::format_decomposition(decomposition));
  return 0;
}

int cmd_compose(const Common& common, const std::vector<std::string>& labels, const std::string& file) {
  std::vector<carry::CarryIdealLabel> parsed;
  if (!file.empty()) {
    const std::string text = read_source(file);
    const auto first = text.find_first_not_of(" \t\r\n");
    const auto b = (first != std::string::npos && text[first] == '{') ? carry::decomposition_from_json(text)
                                                                         : carry::parse_decomposition(text);
    parsed = b.labels();
  }
  for (const auto& s : labels) parsed.push_back(carry::parse_label(s));
  if (parsed.empty()) throw carry::ArgumentError("compose needs at least one label");
  const auto ideal = carry::ideal_from_labels(parsed);
  emit(common, json::parse(carry::ideal_to_json(ideal)), carry::format_ideal(ideal));
  return 0;
}

int cmd_generators(const Common& common, const std::string& source) {
  const auto input = load_input(source);
  json payload = json::parse(carry::ideal_to_json(input.ideal));
  std::string text = carry::format_ideal(input.ideal);
  if (input.label && input.ideal.n() == 2) {
    const auto f = carry::generators_via_segmentation(input.label->pattern());
    const std::string product = carry::format_factorization(f.factors);
    payload["factorization"] = product;
    text += "factorization: " + product + '\n';
  }
  emit(common, payload, text);
  return 0;
}

enum class BettiMethod { Default, Formula, Koszul, Both };

carry::BettiTable formula_betti(const Input& input) {
  if (input.ideal.n() != 2) throw carry::ArgumentError("--formula needs a two-variable ideal");
  if (input.label) return carry::betti_two_vars(input.label->pattern());
  return carry::betti_from_hilbert_burch(carry::hilbert_burch(input.ideal));
}

carry::BettiTable koszul_betti_warned(const Input& input, std::optional<Int> max_degree) {
  if (input.ideal.max_generator_degree() > kKoszulWarnDegree) {
    std::cerr << "warning: Koszul homology in degree " << input.ideal.max_generator_degree()
              << " may take a long time; --formula is available for two variables\n";
  }
  return carry::koszul_betti(input.ideal, koszul_options(max_degree));
}

int cmd_betti(const Common& common, const std::string& source, BettiMethod method, std::optional<Int> max_degree) {
  const auto input = load_input(source);
  if (method == BettiMethod::Default) method = input.ideal.n() == 2 ? BettiMethod::Formula : BettiMethod::Koszul;
  if (method == BettiMethod::Both) {
    const auto a = formula_betti(input);
    const auto b = koszul_betti_warned(input, max_degree);
    const bool agree = a == b;
    emit(common, {{"formula", table_json(a)}, {"koszul", table_json(b)}, {"agree", agree}},
         "formula: " + betti_line(a) + "\nkoszul:  " + betti_line(b) + "\n" + (agree ? "agree" : "DISAGREE") + "\n");
    return agree ? 0 : 1;
  }
  const auto table = method == BettiMethod::Formula ? formula_betti(input) : koszul_betti_warned(input, max_degree);
  emit(common, table_json(table), carry::render(table, {.elide_empty_rows = true}) + betti_line(table) + '\n');
  return 0;
}

int cmd_reg(const Common& common, const std::string& source) {
  const auto input = load_input(source);
  Int reg = 0;
  if (input.label && input.ideal.n() == 2) {
    reg = carry::regularity_two_vars(input.label->pattern());
  } else if (input.ideal.n() == 2) {
    reg = carry::betti_from_hilbert_burch(carry::hilbert_burch(input.ideal)).regularity();
  } else {
    reg = carry::regularity(input.ideal);
  }
  emit(common, {{"regularity", reg}}, "reg=" + std::to_string(reg));
  return 0;
}

int cmd_contains(const Common& common, const std::string& outer, const std::string& inner) {
  const auto big = load_input(outer);
  const auto small = load_input(inner);
  json payload;
  std::string text;
  if (big.label && small.label && big.label->degree() <= small.label->degree()) {
    const auto r = carry::containment(big.label->pattern(), small.label->pattern());
    payload = {{"contained", r.contained}, {"steps", r.steps}};
    text = r.contained ? "contained" : "NOT contained";
    if (r.saturation_degree) {
      payload["saturation_degree"] = *r.saturation_degree;
      text += "; successor saturates at degree " + std::to_string(*r.saturation_degree);
    }
  } else {
    const bool contained = big.ideal.contains(small.ideal);
    payload = {{"contained", contained}};
    text = contained ? "contained" : "NOT contained";
  }
  emit(common, payload, text);
  return 0;
}

int cmd_invariant(const Common& common, const std::string& source) {
  const auto input = load_input(source);
  const auto report = carry::is_invariant(input.ideal);
  if (report.invariant) {
    emit(common, {{"invariant", true}}, "invariant");
    return 0;
  }
  const auto& w = *report.witness;
  const auto present = carry::carry_pattern(input.ideal.ring(), w.present);
  const std::string kind = w.split_class ? "split" : "partial";
  json payload{{"invariant", false},
               {"witness",
                {{"degree", w.degree},
                 {"present", w.present},
                 {"missing", w.missing},
                 {"class", pattern_json(present)},
                 {"kind", kind}}}};
  emit(common, payload,
       "NOT invariant; witness: degree " + std::to_string(w.degree) + ", class " + carry::to_string(present) + " " +
           kind + "\n" + carry::describe(w, input.ideal.ring()) + "\n");
  return 0;
}

int cmd_purity(const Common& common, const std::string& source) {
  const auto input = load_input(source);
  const auto cert = carry::is_pure_two_vars(input.ideal);
  if (!cert) {
    emit(common, {{"pure", false}}, "not a Frobenius power of a power of m");
    return 0;
  }
  emit(common, {{"pure", true}, {"m", cert->m}, {"e", cert->e}},
       "pure: (m^" + std::to_string(cert->m) + ")^[p^" + std::to_string(cert->e) + "]");
  return 0;
}

int cmd_torclass(const Common& common, const std::string& source, int i, Int j) {
  const auto input = load_input(source);
  const auto cls = carry::tor_class(input.ideal, i, j);
  json terms = json::array();
  for (const auto& [lambda, mult] : cls.simples()) terms.push_back({{"lambda", {lambda.first, lambda.second}}, {"mult", mult}});
  emit(common, {{"i", i}, {"j", j}, {"class", terms}, {"dimension", cls.dimension()}}, carry::to_string(cls));
  return 0;
}

int cmd_verify_fixtures(const Common& common) {
  const auto results = carry::verify_fixtures();
  json payload = json::array();
  std::string text;
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    payload.push_back({{"id", r.id}, {"module", r.module}, {"passed", r.passed}, {"observed", r.observed}});
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.id + " [" + r.module + "] " + r.description + '\n';
    if (!r.passed) text += "     observed: " + r.observed + '\n';
  }
  text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " fixtures passed\n";
  emit(common, {{"fixtures", payload}, {"failed", failed}}, text);
  return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::setvbuf(stdout, nullptr, _IOLBF, 0);

  CLI::App app{"carry pattern and invariant monomial ideal toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Machine-readable output");

  int exit_code = 0;
  auto run = [&](auto&& body) {
    return [&, body] { exit_code = body(); };
  };

  Int d = 0, p = 0;
  int n = 2;
  bool dot = false;
  auto* enumerate = app.add_subcommand("enumerate", "List C(d,n,p) with its covering relations");
  enumerate->add_option("-d", d, "Degree")->required();
  enumerate->add_option("-n", n, "Number of variables")->check(CLI::Range(1, 64));
  enumerate->add_option("-p", p, "Characteristic")->required();
  enumerate->add_flag("--hasse-dot", dot, "Print the Hasse diagram in DOT");
  enumerate->callback(run([&] { return cmd_enumerate(common, d, n, p, dot); }));

  std::vector<Int> exponents;
  auto* carry_cmd = app.add_subcommand("carry", "Carry pattern of a monomial");
  carry_cmd->add_option("-p", p, "Characteristic")->required();
  carry_cmd->add_option("exponents", exponents, "Exponent vector")->required();
  carry_cmd->callback(run([&] { return cmd_carry(common, p, exponents); }));

  std::string source;
  auto* decompose = app.add_subcommand("decompose", "Write an invariant ideal as a sum of carry ideals");
  decompose->add_option("input", source, "Label, ideal file, or -")->required();
  decompose->callback(run([&] { return cmd_decompose(common, source); }));

  std::vector<std::string> labels;
  std::string file;
  auto* compose = app.add_subcommand("compose", "Ideal generated by a set of carry ideals");
  compose->add_option("--label", labels, "Inline label, repeatable");
  compose->add_option("--file", file, "Decomposition file (text or JSON)");
  compose->callback(run([&] { return cmd_compose(common, labels, file); }));

  auto* generators = app.add_subcommand("generators", "Minimal generators of an ideal");
  generators->add_option("input", source, "Label, ideal file, or -")->required();
  generators->callback(run([&] { return cmd_generators(common, source); }));

  bool formula = false, koszul = false, both = false;
  std::optional<Int> max_degree;
  auto* betti = app.add_subcommand("betti", "Graded Betti numbers");
  betti->add_option("input", source, "Label, ideal file, or -");
  betti->add_option("--label", source, "Inline label");
  auto* f_formula = betti->add_flag("--formula", formula, "Closed form (two variables)");
  auto* f_koszul = betti->add_flag("--koszul", koszul, "Koszul homology over F_p");
  auto* f_both = betti->add_flag("--both", both, "Compute both and compare");
  f_formula->excludes(f_koszul)->excludes(f_both);
  f_koszul->excludes(f_both);
  betti->add_option("--max-degree", max_degree, "Koszul degree cap for ideals of infinite colength");
  betti->callback(run([&] {
    if (source.empty()) throw CLI::RequiredError("input or --label");
    const BettiMethod method = both      ? BettiMethod::Both
                               : formula ? BettiMethod::Formula
                               : koszul  ? BettiMethod::Koszul
                                         : BettiMethod::Default;
    return cmd_betti(common, source, method, max_degree);
  }));

  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity");
  reg->add_option("input", source, "Label, ideal file, or -")->required();
  reg->callback(run([&] { return cmd_reg(common, source); }));

  std::string outer, inner;
  auto* contains = app.add_subcommand("contains", "Whether INNER is contained in OUTER");
  contains->add_option("outer", outer, "Label or ideal file")->required();
  contains->add_option("inner", inner, "Label or ideal file")->required();
  contains->callback(run([&] { return cmd_contains(common, outer, inner); }));

  auto* invariant = app.add_subcommand("invariant", "GL_n-invariance check with a witness");
  invariant->add_option("input", source, "Label, ideal file, or -")->required();
  invariant->callback(run([&] { return cmd_invariant(common, source); }));

  auto* purity = app.add_subcommand("purity", "Is a two-variable ideal (m^m)^[p^e]?");
  purity->add_option("input", source, "Label, ideal file, or -")->required();
  purity->callback(run([&] { return cmd_purity(common, source); }));

  int tor_i = 1;
  Int tor_j = 0;
  auto* torclass = app.add_subcommand("torclass", "Class of Tor_i(I,k)_j in the Grothendieck group of GL_2");
  torclass->add_option("input", source, "Label, ideal file, or -")->required();
  torclass->add_option("-i", tor_i, "Homological degree (1 or 2)")->required();
  torclass->add_option("-j", tor_j, "Internal degree")->required();
  torclass->callback(run([&] { return cmd_torclass(common, source, tor_i, tor_j); }));

  auto* verify = app.add_subcommand("verify-fixtures", "Run the built-in example corpus");
  verify->callback(run([&] { return cmd_verify_fixtures(common); }));

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->add_flag("--json", common.json, "Machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const carry::Error& e) {
    if (common.json) {
      std::cout << json{{"error", e.what()}}.dump() << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return exit_code;
}
