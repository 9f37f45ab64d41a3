#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbax/enumerate.hpp"
#include "rbax/enveloping.hpp"
#include "rbax/errors.hpp"
#include "rbax/expr.hpp"
#include "rbax/free_rba.hpp"
#include "rbax/oracles.hpp"
#include "rbax/parse.hpp"
#include "rbax/suites.hpp"
#include "rbax/trees.hpp"

namespace {

using nlohmann::ordered_json;
using namespace rbax;

struct Session {
  std::string weight_text = "0";
  std::string base_spec = "zero";
  std::string alphabet_path;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::size_t max_n = 3;
  int trials = 100;

  bool json() const { return format == "json"; }

  Rational weight() const { return Rational::parse(weight_text); }

  Alphabet alphabet() const {
    if (!alphabet_path.empty()) return Alphabet::load_file(alphabet_path);
    return Alphabet(std::vector<std::string>{"x", "y", "z"});
  }

  BaseAlgebra base() const {
    if (base_spec == "zero") return BaseAlgebra::zero_product(alphabet());
    if (base_spec == "tensor") return BaseAlgebra::free_monoid(alphabet());
    if (base_spec.rfind("table:", 0) == 0) {
      return BaseAlgebra::load_table_file(alphabet(), base_spec.substr(6));
    }
    throw DomainError("unknown base '" + base_spec + "'; use zero, tensor, or table:PATH");
  }

  FreeRba context() const { return FreeRba(base(), weight()); }

  ordered_json header(const std::string& command) const {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["weight"] = weight().str();
    j["base"] = base_spec;
    j["seed"] = seed;
    return j;
  }
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_eval(const Session& s, const std::string& expr_text, const std::string& ops) {
  FreeRba ctx = s.context();
  DendContext dc = ops == "dialgebra" ? DendContext::dialgebra : DendContext::trialgebra;
  Element value = eval_expression(ctx, expr_text, dc);
  if (s.json()) {
    ordered_json j = s.header("eval");
    j["input"] = expr_text;
    j["value"] = render_element(value, ctx.alphabet());
    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : value.terms()) {
      terms.push_back({{"coeff", c.str()}, {"word", render_word(w, ctx.alphabet())}});
    }
    j["terms"] = terms;
    emit(j);
  } else {
    std::cout << render_element(value, ctx.alphabet()) << "\n";
  }
  return 0;
}

int cmd_check(const Session& s, std::vector<std::string> suites) {
  if (suites.empty()) suites = suite_names();
  FreeRba ctx = s.context();
  SuiteConfig cfg{s.trials, s.seed, s.max_n};
  bool all_pass = true;
  int total = 0;
  int passed = 0;
  ordered_json jsuites = ordered_json::array();
  for (const std::string& name : suites) {
    std::vector<PropertyResult> results = run_suite(name, ctx, cfg);
    ordered_json jresults = ordered_json::array();
    for (const PropertyResult& r : results) {
      ++total;
      if (r.pass) ++passed;
      all_pass = all_pass && r.pass;
      if (s.json()) {
        jresults.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      } else {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << "/" << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
      }
    }
    if (s.json()) {
      jsuites.push_back({{"name", name}, {"results", jresults}});
    }
  }
  if (s.json()) {
    ordered_json j = s.header("check");
    j["trials"] = s.trials;
    j["suites"] = jsuites;
    j["passed"] = passed;
    j["total"] = total;
    j["pass"] = all_pass;
    emit(j);
  } else {
    std::cout << "check: " << passed << "/" << total << " properties passed\n";
  }
  return all_pass ? 0 : 1;
}

struct CountRow {
  std::size_t n = 0;
  std::size_t primary = 0;    // enumerated count (trees or filtered words)
  std::size_t secondary = 0;  // independent route
  bool agree = true;
};

std::vector<std::size_t> catalan_upto(std::size_t n_max) {
  std::vector<std::size_t> c{1};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += c[i] * c[n - 1 - i];
    c.push_back(total);
  }
  return c;
}

std::vector<std::size_t> super_catalan_upto(std::size_t n_max) {
  // s(1) = s(2) = 1, n s(n) = (6n - 9) s(n-1) - (n - 3) s(n-2); grade g is s(g+1)
  std::vector<long long> s{0, 1, 1};
  for (std::size_t n = 3; n <= n_max + 1; ++n) {
    s.push_back(((6 * (long long)n - 9) * s[n - 1] - ((long long)n - 3) * s[n - 2]) /
                (long long)n);
  }
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g <= n_max; ++g) out.push_back((std::size_t)s[g + 1]);
  return out;
}

int cmd_count(const Session& s, const std::string& family) {
  Alphabet alphabet = s.alphabet();
  std::vector<CountRow> rows;
  std::string primary_label;
  std::string secondary_label;

  auto power = [&](std::size_t n) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= alphabet.size();
    return p;
  };

  if (family == "binary" || family == "planar") {
    primary_label = "enumerated";
    secondary_label = "recurrence";
    std::vector<std::size_t> reference =
        family == "binary" ? catalan_upto(s.max_n) : super_catalan_upto(s.max_n);
    for (std::size_t n = 0; n <= s.max_n; ++n) {
      CountRow row;
      row.n = n;
      row.primary = family == "binary" ? enumerate_binary_trees(n, alphabet).size()
                                       : enumerate_planar_trees(n, alphabet).size();
      row.secondary = reference[n] * power(n);
      row.agree = row.primary == row.secondary;
      rows.push_back(row);
    }
  } else if (family == "diwords" || family == "triwords") {
    primary_label = "via-predicate";
    secondary_label = "via-trees";
    bool binary = family == "diwords";
    BaseAlgebra base = binary ? BaseAlgebra::zero_product(alphabet)
                              : BaseAlgebra::free_monoid(alphabet);
    for (std::size_t n = 1; n <= s.max_n; ++n) {
      CountRow row;
      row.n = n;
      std::set<std::string> images;
      if (binary) {
        for (const BTreePtr& t : enumerate_binary_trees(n, alphabet)) {
          images.insert(render_word(phi(t), alphabet));
        }
      } else {
        for (const PTreePtr& t : enumerate_planar_trees(n, alphabet)) {
          images.insert(render_word(psi(t), alphabet));
        }
      }
      row.secondary = images.size();
      std::size_t filtered = 0;
      for (const Word& w : enumerate_words(base, {n, n, 2000000})) {
        if (w.letter_count() != n) continue;
        if (binary ? is_diword(w) : is_triword(w)) ++filtered;
      }
      row.primary = filtered;
      row.agree = row.primary == row.secondary;
      rows.push_back(row);
    }
  } else {
    throw DomainError("unknown family '" + family +
                      "'; use binary, planar, diwords, or triwords");
  }

  bool all_agree = true;
  for (const CountRow& r : rows) all_agree = all_agree && r.agree;

  if (s.json()) {
    ordered_json j = s.header("count");
    j["family"] = family;
    j["alphabet_size"] = alphabet.size();
    ordered_json jrows = ordered_json::array();
    for (const CountRow& r : rows) {
      jrows.push_back({{"n", r.n},
                       {primary_label, r.primary},
                       {secondary_label, r.secondary},
                       {"agree", r.agree}});
    }
    j["rows"] = jrows;
    j["pass"] = all_agree;
    emit(j);
  } else {
    for (const CountRow& r : rows) {
      std::cout << "n=" << r.n << " " << primary_label << "=" << r.primary << " "
                << secondary_label << "=" << r.secondary << " "
                << (r.agree ? "ok" : "MISMATCH") << "\n";
    }
    std::cout << "count " << family << ": " << (all_agree ? "routes agree" : "routes disagree")
              << "\n";
  }
  return all_agree ? 0 : 1;
}

int cmd_embed(const Session& s, const std::string& family, const std::string& tree_text,
              bool verify) {
  Alphabet alphabet = s.alphabet();
  Word image = family == "binary" ? phi(parse_binary_tree(tree_text, alphabet))
                                  : psi(parse_planar_tree(tree_text, alphabet));
  bool predicate = family == "binary" ? is_diword(image) : is_triword(image);
  if (s.json()) {
    ordered_json j = s.header("embed");
    j["family"] = family;
    j["tree"] = tree_text;
    j["word"] = render_word(image, alphabet);
    if (verify) j["image_predicate"] = predicate;
    emit(j);
  } else {
    std::cout << render_word(image, alphabet) << "\n";
    if (verify) {
      std::cout << (family == "binary" ? "diword: " : "triword: ")
                << (predicate ? "yes" : "NO") << "\n";
    }
  }
  return verify && !predicate ? 1 : 0;
}

struct EnvelopeSetup {
  FiniteDendriform structure;
  std::string oracle_desc;
  // exactly one of the two image sets is used, matching the oracle kind
  bool sequence = true;
  std::size_t length_or_degree = 0;
  std::vector<SequenceRba::Element> seq_images;
  std::vector<PolynomialRba::Element> poly_images;
};

std::vector<Rational> parse_coords(const std::string& text) {
  std::istringstream in(text);
  std::vector<Rational> out;
  std::string tok;
  while (in >> tok) out.push_back(Rational::parse(tok));
  return out;
}

EnvelopeSetup load_envelope_file(const std::string& path) {
  EnvelopeSetup setup{FiniteDendriform::load_file(path), "", true, 0, {}, {}};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::vector<std::pair<std::string, std::vector<Rational>>> maps;
  bool oracle_seen = false;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "oracle") {
      std::string kind;
      std::size_t param = 0;
      if (!(ls >> kind >> param)) throw DomainError("malformed oracle line in '" + path + "'");
      if (kind != "sequence" && kind != "polynomial") {
        throw DomainError("unknown oracle '" + kind + "'; use sequence or polynomial");
      }
      setup.sequence = kind == "sequence";
      setup.length_or_degree = param;
      oracle_seen = true;
    } else if (head == "map") {
      std::string name, arrow;
      if (!(ls >> name >> arrow) || arrow != "->") {
        throw DomainError("malformed map line in '" + path + "'");
      }
      std::string rest;
      std::getline(ls, rest);
      maps.emplace_back(name, parse_coords(rest));
    }
  }
  if (!oracle_seen) throw DomainError("missing oracle line in '" + path + "'");
  const auto& names = setup.structure.basis_names();
  std::vector<std::vector<Rational>> images(names.size());
  std::vector<bool> seen(names.size(), false);
  for (auto& [name, coords] : maps) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw DomainError("map for unknown basis element '" + name + "'");
    std::size_t idx = (std::size_t)(it - names.begin());
    images[idx] = std::move(coords);
    seen[idx] = true;
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen[i]) throw DomainError("missing map line for basis element '" + names[i] + "'");
  }
  if (setup.sequence) {
    setup.oracle_desc = "sequence(" + std::to_string(setup.length_or_degree) + ")";
    for (auto& v : images) {
      if (v.size() != setup.length_or_degree) {
        throw DomainError("map coordinates must list " +
                          std::to_string(setup.length_or_degree) + " sequence entries");
      }
      setup.seq_images.push_back(std::move(v));
    }
  } else {
    setup.oracle_desc = "polynomial(" + std::to_string(setup.length_or_degree) + ")";
    for (auto& v : images) setup.poly_images.push_back(std::move(v));
  }
  return setup;
}

EnvelopeSetup builtin_envelope(const std::string& target, const Session& s, std::size_t n,
                               std::size_t degree) {
  if (target == "seq-tri") {
    EnvelopeSetup setup{FiniteDendriform::sequence_trialgebra(n, Rational(1)),
                        "sequence(" + std::to_string(n) + ")", true, n, {}, {}};
    SequenceRba seq(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) setup.seq_images.push_back(seq.basis(i));
    return setup;
  }
  if (target == "seq-di") {
    Rational w = s.weight();
    EnvelopeSetup setup{FiniteDendriform::sequence_prime_dialgebra(n, w),
                        "sequence(" + std::to_string(n) + ")", true, n, {}, {}};
    SequenceRba seq(n, w);
    for (std::size_t i = 0; i < n; ++i) setup.seq_images.push_back(seq.basis(i));
    return setup;
  }
  if (target == "poly-di") {
    EnvelopeSetup setup{FiniteDendriform::poly_dialgebra(degree),
                        "polynomial(" + std::to_string(degree) + ")", false, degree, {}, {}};
    PolynomialRba poly(degree);
    for (std::size_t i = 0; i <= degree; ++i) setup.poly_images.push_back(poly.monomial(i));
    return setup;
  }
  return load_envelope_file(target);
}

int cmd_envelope(const Session& s, const std::string& target, std::size_t n,
                 std::size_t degree, std::size_t pairs) {
  EnvelopeSetup setup = builtin_envelope(target, s, n, degree);
  const FiniteDendriform& d = setup.structure;
  bool tri = d.kind() == FiniteDendriform::Kind::trialgebra;
  FreeRba ctx = tri ? tri_envelope_context(d, d.weight())
                    : di_envelope_context(d, d.weight());
  EnvelopeReport report;
  if (setup.sequence) {
    SequenceRba oracle(setup.length_or_degree, d.weight());
    report = verify_envelope(d, ctx, oracle, setup.seq_images, pairs);
  } else {
    PolynomialRba oracle(setup.length_or_degree);
    report = verify_envelope(d, ctx, oracle, setup.poly_images, pairs);
  }

  std::size_t zero_rows = 0;
  for (const EnvelopeRow& r : report.rows) {
    if (r.pass) ++zero_rows;
  }

  if (s.json()) {
    ordered_json j = s.header("envelope");
    j["target"] = target;
    j["kind"] = to_string(d.kind());
    j["dim"] = d.dim();
    j["structure_weight"] = d.weight().str();
    j["oracle"] = setup.oracle_desc;
    j["failures"] = report.failures;
    ordered_json jrows = ordered_json::array();
    for (const EnvelopeRow& r : report.rows) {
      jrows.push_back({{"pair", r.pair},
                       {"generator", r.generator},
                       {"residual", r.residual},
                       {"pass", r.pass}});
    }
    j["rows"] = jrows;
    j["residuals_zero"] = zero_rows;
    j["residuals_total"] = report.rows.size();
    j["pass"] = report.pass;
    emit(j);
  } else {
    std::cout << "structure: " << to_string(d.kind()) << ", dim " << d.dim()
              << ", weight " << d.weight().str() << "\n";
    std::cout << "oracle: " << setup.oracle_desc << "\n";
    for (const std::string& f : report.failures) std::cout << "[FAIL] " << f << "\n";
    for (const EnvelopeRow& r : report.rows) {
      if (!r.pass) {
        std::cout << "[FAIL] pair " << r.pair << ", generator " << r.generator
                  << ", residual " << r.residual << "\n";
      }
    }
    if (report.rows.empty() && !report.failures.empty()) {
      std::cout << "[FAIL] structure validation: " << report.failures.size()
                << " problem(s), no generators checked\n";
    } else {
      std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << "generator annihilation: "
                << zero_rows << "/" << report.rows.size() << " residuals zero\n";
    }
  }
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Session session;
  CLI::App app{"Exact computations in free Rota-Baxter algebras on bracketed words"};
  app.require_subcommand(1);
  app.add_option("--weight", session.weight_text, "Operator weight, a rational like -1 or 1/2");
  app.add_option("--base", session.base_spec, "Coefficient algebra: zero, tensor, or table:PATH");
  app.add_option("--alphabet", session.alphabet_path, "File with one generator name per line");
  app.add_option("--seed", session.seed, "Seed for randomized checks");
  app.add_option("--format", session.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-n", session.max_n, "Grading bound for enumeration commands");
  app.add_option("--trials", session.trials, "Random trials per property")
      ->check(CLI::PositiveNumber);

  std::string expr_text;
  std::string eval_ops = "trialgebra";
  CLI::App* eval = app.add_subcommand("eval", "Evaluate an expression and print the element");
  eval->add_option("expression", expr_text, "Expression over words, R(...), prec/succ/dot")
      ->required();
  eval->add_option("--ops", eval_ops, "Splitting context: trialgebra or dialgebra")
      ->check(CLI::IsMember({"trialgebra", "dialgebra"}));

  std::vector<std::string> suites;
  CLI::App* check = app.add_subcommand("check", "Run property suites");
  check->add_option("suites", suites, "Suites: words dendriform oracle trees (default all)")
      ->check(CLI::IsMember(suite_names()));

  std::string count_family;
  CLI::App* count = app.add_subcommand("count", "Count trees and their word images per grade");
  count->add_option("family", count_family, "binary, planar, diwords, or triwords")
      ->required()
      ->check(CLI::IsMember({"binary", "planar", "diwords", "triwords"}));

  std::string embed_family;
  std::string tree_text;
  bool embed_verify = false;
  CLI::App* embed = app.add_subcommand("embed", "Map a decorated tree to its word");
  embed->add_option("family", embed_family, "binary or planar")
      ->required()
      ->check(CLI::IsMember({"binary", "planar"}));
  embed->add_option("tree", tree_text, "Tree in the '|'/'(l^x r)' or 'V(...)' grammar")
      ->required();
  embed->add_flag("--check", embed_verify, "Also test the image characterization");

  std::string envelope_target;
  std::size_t envelope_n = 6;
  std::size_t envelope_degree = 3;
  std::size_t envelope_pairs = 0;
  CLI::App* envelope =
      app.add_subcommand("envelope", "Verify that the enveloping ideal dies in an oracle");
  envelope
      ->add_option("target", envelope_target,
                   "seq-tri, seq-di, poly-di, or a structure file with oracle/map lines")
      ->required();
  envelope->add_option("--n", envelope_n, "Sequence length for the seq-* targets");
  envelope->add_option("--degree", envelope_degree, "Degree bound for poly-di");
  envelope->add_option("--pairs", envelope_pairs, "Check only this many basis pairs (0 = all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) return cmd_eval(session, expr_text, eval_ops);
    if (check->parsed()) return cmd_check(session, suites);
    if (count->parsed()) return cmd_count(session, count_family);
    if (embed->parsed()) return cmd_embed(session, embed_family, tree_text, embed_verify);
    if (envelope->parsed()) {
      return cmd_envelope(session, envelope_target, envelope_n, envelope_degree,
                          envelope_pairs);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
