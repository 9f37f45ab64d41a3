#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "eleven_terms.hpp"
#include "rbax/dendriform.hpp"
#include "rbax/enumerate.hpp"
#include "rbax/enveloping.hpp"
#include "rbax/expr.hpp"
#include "rbax/free_rba.hpp"
#include "rbax/morphism.hpp"
#include "rbax/oracles.hpp"
#include "rbax/sampling.hpp"
#include "rbax/trees.hpp"

using namespace rbax;

namespace {

struct Criterion {
  std::string name;
  double time_limit_s;
  std::function<std::string()> run;  // empty string = pass, otherwise failure detail
};

std::vector<Rational> weight_sweep() {
  return {Rational(0), Rational(1), Rational(-1), Rational(2)};
}

FreeRba make_ctx(BaseKind kind, const Rational& weight) {
  Alphabet a({"x", "y", "z"});
  BaseAlgebra base = kind == BaseKind::zero_product ? BaseAlgebra::zero_product(a)
                                                    : BaseAlgebra::free_monoid(a);
  return FreeRba(std::move(base), weight);
}

std::string describe(const FreeRba& ctx) {
  return to_string(ctx.base().kind()) + ", weight " + ctx.weight().str();
}

WordSampleConfig acceptance_words() {
  WordSampleConfig wcfg;
  wcfg.max_depth = 3;
  wcfg.max_breadth = 3;
  return wcfg;
}

std::string check_associativity() {
  for (BaseKind kind : {BaseKind::zero_product, BaseKind::free_monoid}) {
    for (const Rational& w : weight_sweep()) {
      FreeRba ctx = make_ctx(kind, w);
      Rng rng(101);
      WordSampleConfig wcfg = acceptance_words();
      for (int i = 0; i < 500; ++i) {
        Word a = random_word(rng, ctx.base(), wcfg);
        Word b = random_word(rng, ctx.base(), wcfg);
        Word c = random_word(rng, ctx.base(), wcfg);
        Element left = ctx.mul(ctx.mul_words(a, b), ctx.word_element(c));
        Element right = ctx.mul(ctx.word_element(a), ctx.mul_words(b, c));
        if (!(left == right)) {
          return "associativity fails on (" + render_word(a, ctx.alphabet()) + ", " +
                 render_word(b, ctx.alphabet()) + ", " + render_word(c, ctx.alphabet()) +
                 ") under " + describe(ctx);
        }
      }
    }
  }
  return {};
}

std::string check_operator_identity() {
  for (BaseKind kind : {BaseKind::zero_product, BaseKind::free_monoid}) {
    for (const Rational& w : weight_sweep()) {
      FreeRba ctx = make_ctx(kind, w);
      Rng rng(103);
      WordSampleConfig wcfg = acceptance_words();
      for (int i = 0; i < 500; ++i) {
        Element a = ctx.word_element(random_word(rng, ctx.base(), wcfg));
        Element b = ctx.word_element(random_word(rng, ctx.base(), wcfg));
        if (!ctx.is_zero(rb_residual(ctx, a, b))) {
          return "operator identity fails under " + describe(ctx);
        }
      }
    }
  }
  return {};
}

std::string check_eleven_terms() {
  for (int i = 0; i < 100; ++i) {
    BaseKind kind = (i % 2 == 0) ? BaseKind::zero_product : BaseKind::free_monoid;
    Rational w = weight_sweep()[static_cast<std::size_t>(i / 2) % 4];
    FreeRba ctx = make_ctx(kind, w);
    Rng rng(105 + static_cast<std::uint64_t>(i));
    WordSampleConfig wcfg;
    wcfg.max_depth = 2;
    wcfg.max_breadth = 2;
    Word u = random_word(rng, ctx.base(), wcfg);
    Word v = random_word(rng, ctx.base(), wcfg);
    Word x = random_word(rng, ctx.base(), wcfg);
    std::vector<Element> left = rbref::left_terms(ctx, u, v, x);
    std::vector<Element> right = rbref::right_terms(ctx, u, v, x);
    const auto& sigma = rbref::term_matching();
    for (std::size_t k = 0; k < 11; ++k) {
      if (!(left[k] == right[sigma[k]])) {
        return "term pairing breaks at index " + std::to_string(k) + " on trial " +
               std::to_string(i) + " under " + describe(ctx);
      }
    }
    std::vector<std::string> left_texts;
    std::vector<std::string> right_texts;
    for (const Element& t : left) left_texts.push_back(render_element(t, ctx.alphabet()));
    for (const Element& t : right) {
      right_texts.push_back(render_element(t, ctx.alphabet()));
    }
    std::sort(left_texts.begin(), left_texts.end());
    std::sort(right_texts.begin(), right_texts.end());
    if (left_texts != right_texts) {
      return "expansions disagree as multisets on trial " + std::to_string(i) +
             " under " + describe(ctx);
    }
  }
  return {};
}

template <LinearSpace M, class SampleFn>
std::string splitting_sweep(const M& m, const DendOps<typename M::Element>& ops,
                            bool tri, SampleFn&& sample, int triples,
                            const std::string& label) {
  for (int i = 0; i < triples; ++i) {
    auto x = sample();
    auto y = sample();
    auto z = sample();
    auto report = tri ? check_trialgebra(m, ops, x, y, z)
                      : check_dialgebra(m, ops, x, y, z);
    if (!report.pass()) {
      return label + ": axiom '" + report.first_failure()->axiom + "' fails";
    }
  }
  return {};
}

std::string check_splitting_axioms() {
  // Bracketed words over the tensor base.
  for (const Rational& w : weight_sweep()) {
    FreeRba ctx = make_ctx(BaseKind::free_monoid, w);
    Rng rng(107);
    WordSampleConfig wcfg;
    auto sample = [&] { return random_element(rng, ctx, wcfg); };
    std::string label = "words, " + describe(ctx);
    if (auto err = splitting_sweep(ctx, induced_trialgebra_ops(ctx), true, sample, 125,
                                   label + ", three-piece");
        !err.empty()) {
      return err;
    }
    if (auto err = splitting_sweep(ctx, induced_prime_dialgebra_ops(ctx), false, sample,
                                   125, label + ", prime two-piece");
        !err.empty()) {
      return err;
    }
  }
  {
    FreeRba ctx = make_ctx(BaseKind::free_monoid, Rational(0));
    Rng rng(109);
    WordSampleConfig wcfg;
    auto sample = [&] { return random_element(rng, ctx, wcfg); };
    if (auto err = splitting_sweep(ctx, induced_dialgebra_ops(ctx), false, sample, 500,
                                   "words, weight 0, plain two-piece");
        !err.empty()) {
      return err;
    }
  }
  // Sequence structure.
  for (const Rational& w : weight_sweep()) {
    SequenceRba seq(6, w);
    Rng rng(111);
    auto sample = [&] { return random_sequence(rng, seq); };
    std::string label = "sequences, weight " + w.str();
    if (auto err = splitting_sweep(seq, induced_trialgebra_ops(seq), true, sample, 125,
                                   label + ", three-piece");
        !err.empty()) {
      return err;
    }
    if (auto err = splitting_sweep(seq, induced_prime_dialgebra_ops(seq), false, sample,
                                   125, label + ", prime two-piece");
        !err.empty()) {
      return err;
    }
  }
  {
    SequenceRba seq(6, Rational(0));
    Rng rng(113);
    auto sample = [&] { return random_sequence(rng, seq); };
    if (auto err = splitting_sweep(seq, induced_dialgebra_ops(seq), false, sample, 500,
                                   "sequences, weight 0, plain two-piece");
        !err.empty()) {
      return err;
    }
  }
  // Polynomial structure (weight 0).
  {
    PolynomialRba poly;
    Rng rng(115);
    auto sample = [&] { return random_polynomial(rng, poly, 4); };
    if (auto err = splitting_sweep(poly, induced_trialgebra_ops(poly), true, sample, 500,
                                   "polynomials, three-piece");
        !err.empty()) {
      return err;
    }
    if (auto err = splitting_sweep(poly, induced_dialgebra_ops(poly), false, sample, 500,
                                   "polynomials, plain two-piece");
        !err.empty()) {
      return err;
    }
    if (auto err = splitting_sweep(poly, induced_prime_dialgebra_ops(poly), false,
                                   sample, 500, "polynomials, prime two-piece");
        !err.empty()) {
      return err;
    }
  }
  return {};
}

std::string check_collapse_agreement() {
  for (const Rational& w : weight_sweep()) {
    FreeRba ctx = make_ctx(BaseKind::free_monoid, w);
    Rng rng(117);
    WordSampleConfig wcfg;
    DendOps<Element> collapsed = to_dialgebra(ctx, induced_trialgebra_ops(ctx));
    DendOps<Element> direct = induced_prime_dialgebra_ops(ctx);
    for (int i = 0; i < 50; ++i) {
      Element a = random_element(rng, ctx, wcfg);
      Element b = random_element(rng, ctx, wcfg);
      if (!(collapsed.prec(a, b) == direct.prec(a, b)) ||
          !(collapsed.succ(a, b) == direct.succ(a, b))) {
        return "collapsed operations disagree under " + describe(ctx);
      }
    }
  }
  return {};
}

std::string check_tree_counts() {
  const std::array<std::size_t, 5> catalan = {1, 1, 2, 5, 14};
  const std::array<std::size_t, 5> super = {1, 1, 3, 11, 45};
  Alphabet one({"x"});
  std::array<std::size_t, 5> catalan_oracle{};
  catalan_oracle[0] = 1;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < n; ++k) {
      total += catalan_oracle[k] * catalan_oracle[n - 1 - k];
    }
    catalan_oracle[n] = total;
  }
  std::array<std::size_t, 5> super_oracle{};
  super_oracle[0] = 1;
  super_oracle[1] = 1;
  for (std::size_t n = 2; n <= 4; ++n) {
    // n s(n) = (6n - 9) s(n-1) - (n - 3) s(n-2) over the shifted sequence
    // s(k) = number of planar trees with k leaves.
    std::size_t k = n + 1;
    std::size_t lhs = (6 * k - 9) * super_oracle[n - 1];
    std::size_t rhs = (k - 3) * super_oracle[n - 2];
    super_oracle[n] = (lhs - rhs) / k;
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    std::size_t binary = enumerate_binary_trees(n, one).size();
    std::size_t planar = enumerate_planar_trees(n, one).size();
    if (binary != catalan[n] || binary != catalan_oracle[n]) {
      return "binary count at grade " + std::to_string(n) + " is " +
             std::to_string(binary);
    }
    if (planar != super[n] || planar != super_oracle[n]) {
      return "planar count at grade " + std::to_string(n) + " is " +
             std::to_string(planar);
    }
  }
  return {};
}

std::string check_word_images() {
  Alphabet two({"x", "y"});
  FreeRba zero_ctx(BaseAlgebra::zero_product(two), Rational(0));
  FreeRba tensor_ctx(BaseAlgebra::free_monoid(two), Rational(1));

  // Homomorphism identities on every decorated pair with at most 4 leaves.
  std::vector<BTreePtr> binary_small;
  for (std::size_t g = 1; g <= 3; ++g) {
    for (const BTreePtr& t : enumerate_binary_trees(g, two)) binary_small.push_back(t);
  }
  for (const BTreePtr& s : binary_small) {
    for (const BTreePtr& t : binary_small) {
      for (DendKind kind : {DendKind::prec, DendKind::succ}) {
        Element lhs =
            phi_image(btree_op(kind, BTreeSum::single(s), BTreeSum::single(t)));
        Element rhs = induced_op(zero_ctx, kind, phi_image(BTreeSum::single(s)),
                                 phi_image(BTreeSum::single(t)));
        if (!(lhs == rhs)) {
          return "binary image breaks " + to_string(kind) + " on (" +
                 render_tree(*s, two) + ", " + render_tree(*t, two) + ")";
        }
      }
    }
  }
  std::vector<PTreePtr> planar_small;
  for (std::size_t g = 1; g <= 3; ++g) {
    for (const PTreePtr& t : enumerate_planar_trees(g, two)) planar_small.push_back(t);
  }
  for (const PTreePtr& s : planar_small) {
    for (const PTreePtr& t : planar_small) {
      for (DendKind kind : {DendKind::prec, DendKind::succ, DendKind::dot}) {
        Element lhs =
            psi_image(ptree_op(kind, PTreeSum::single(s), PTreeSum::single(t)));
        Element rhs = induced_op(tensor_ctx, kind, psi_image(PTreeSum::single(s)),
                                 psi_image(PTreeSum::single(t)));
        if (!(lhs == rhs)) {
          return "planar image breaks " + to_string(kind) + " on (" +
                 render_tree(*s, two) + ", " + render_tree(*t, two) + ")";
        }
      }
    }
  }

  // Injectivity plus exact image characterization, grade by grade.
  for (std::size_t n = 1; n <= 4; ++n) {
    WordEnumConfig cfg;
    cfg.max_letters = n;
    cfg.max_depth = n;
    cfg.cap = 2000000;

    std::vector<BTreePtr> btrees = enumerate_binary_trees(n, two);
    std::set<std::string> binary_images;
    for (const BTreePtr& t : btrees) {
      if (!binary_images.insert(render_word(phi(t), two)).second) {
        return "binary images collide at grade " + std::to_string(n);
      }
    }
    std::set<std::string> diwords;
    for (const Word& w : enumerate_words(zero_ctx.base(), cfg)) {
      if (w.letter_count() == n && is_diword(w)) diwords.insert(render_word(w, two));
    }
    if (binary_images != diwords) {
      return "binary image characterization fails at grade " + std::to_string(n);
    }

    std::vector<PTreePtr> ptrees = enumerate_planar_trees(n, two);
    std::set<std::string> planar_images;
    for (const PTreePtr& t : ptrees) {
      if (!planar_images.insert(render_word(psi(t), two)).second) {
        return "planar images collide at grade " + std::to_string(n);
      }
    }
    std::set<std::string> triwords;
    for (const Word& w : enumerate_words(tensor_ctx.base(), cfg)) {
      if (w.letter_count() == n && is_triword(w)) triwords.insert(render_word(w, two));
    }
    if (planar_images != triwords) {
      return "planar image characterization fails at grade " + std::to_string(n);
    }
  }
  return {};
}

std::string check_oracle_soundness() {
  for (const Rational& w : weight_sweep()) {
    SequenceRba seq(6, w);
    Rng rng(119);
    for (int i = 0; i < 1000; ++i) {
      auto a = random_sequence(rng, seq);
      auto b = random_sequence(rng, seq);
      if (!seq.is_zero(rb_residual(seq, a, b))) {
        return "sequence structure fails at weight " + w.str();
      }
    }
  }
  PolynomialRba poly;
  Rng rng(121);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_polynomial(rng, poly, 5);
    auto b = random_polynomial(rng, poly, 5);
    if (!poly.is_zero(rb_residual(poly, a, b))) {
      return "polynomial structure fails the operator identity";
    }
  }
  return {};
}

std::string check_envelope() {
  {
    FiniteDendriform d = FiniteDendriform::sequence_trialgebra(6, Rational(1));
    FreeRba ctx = tri_envelope_context(d, Rational(1));
    SequenceRba oracle(6, Rational(1));
    std::vector<SequenceRba::Element> images;
    for (std::size_t i = 0; i < 6; ++i) images.push_back(oracle.basis(i));
    EnvelopeReport report = verify_envelope(d, ctx, oracle, images);
    if (!report.pass) {
      if (!report.failures.empty()) return "sequence envelope: " + report.failures[0];
      return "sequence envelope: a generator residual is nonzero";
    }
    if (report.rows.size() != 72) {
      return "sequence envelope emitted " + std::to_string(report.rows.size()) +
             " rows, expected 72";
    }
  }
  {
    FiniteDendriform d = FiniteDendriform::poly_dialgebra(3);
    FreeRba ctx = di_envelope_context(d, Rational(0));
    PolynomialRba oracle(3);
    std::vector<PolynomialRba::Element> images;
    for (std::size_t i = 0; i <= 3; ++i) images.push_back(oracle.monomial(i));
    EnvelopeReport report = verify_envelope(d, ctx, oracle, images);
    if (!report.pass) {
      if (!report.failures.empty()) return "polynomial envelope: " + report.failures[0];
      return "polynomial envelope: a generator residual is nonzero";
    }
    if (report.rows.size() != 32) {
      return "polynomial envelope emitted " + std::to_string(report.rows.size()) +
             " rows, expected 32";
    }
  }
  return {};
}

template <RotaBaxterAlgebra A, class SampleFn>
std::string morphism_sweep(const A& oracle, const Rational& weight, SampleFn&& image,
                           const std::string& label) {
  FreeRba ctx = make_ctx(BaseKind::free_monoid, weight);
  std::vector<typename A::Element> images;
  for (std::size_t i = 0; i < ctx.alphabet().size(); ++i) images.push_back(image());
  RbaMorphism<A> f(ctx, oracle, images);
  Rng rng(123);
  // Images and sampled words stay small so the exact coefficients fit in
  // 64-bit reduced rationals across 300 products.
  WordSampleConfig wcfg;
  wcfg.max_breadth = 2;
  wcfg.coeff_range = 2;
  for (int i = 0; i < 300; ++i) {
    Element a = random_element(rng, ctx, wcfg);
    Element b = random_element(rng, ctx, wcfg);
    if (!equal(oracle, f.apply(ctx.mul(a, b)), oracle.mul(f.apply(a), f.apply(b)))) {
      return label + ": the image of a product is not the product of images";
    }
    if (!equal(oracle, f.apply(ctx.rb(a)), oracle.rb(f.apply(a)))) {
      return label + ": the morphism does not intertwine the operators";
    }
  }
  return {};
}

std::string check_morphism() {
  SequenceRba seq(6, Rational(1));
  Rng seq_rng(125);
  if (auto err = morphism_sweep(
          seq, Rational(1), [&] { return random_sequence(seq_rng, seq, 2); },
          "sequences");
      !err.empty()) {
    return err;
  }
  PolynomialRba poly(10);
  Rng poly_rng(127);
  return morphism_sweep(
      poly, Rational(0), [&] { return random_polynomial(poly_rng, poly, 2, 2); },
      "polynomials");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"word product is associative (500 triples x 8 configurations)", 60,
       check_associativity},
      {"operator identity holds (500 pairs x 8 configurations)", 30,
       check_operator_identity},
      {"eleven-term expansions match as multisets (100 triples)", 30,
       check_eleven_terms},
      {"splitting axioms hold on words and both coefficient models (500 triples each)",
       60, check_splitting_axioms},
      {"three-piece collapse equals the prime construction (200 pairs)", 60,
       check_collapse_agreement},
      {"tree counts match the closed-form sequences (grades 0..4)", 10,
       check_tree_counts},
      {"word images: homomorphism, injectivity, characterization (grades 1..4)", 120,
       check_word_images},
      {"coefficient models satisfy the operator identity (1000 pairs each)", 60,
       check_oracle_soundness},
      {"envelope generators are annihilated (sequence 6 at weight 1; monomials to "
       "degree 3)",
       60, check_envelope},
      {"morphisms respect product and operator (300 pairs into each model)", 60,
       check_morphism},
  };

  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty() && elapsed > c.time_limit_s) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.1f s exceeds the %.0f s budget", elapsed,
                    c.time_limit_s);
      detail = buf;
    }
    bool ok = detail.empty();
    if (ok) ++passed;
    std::printf("[%s] criterion %zu: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), elapsed, ok ? "" : " -- ", detail.c_str());
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
