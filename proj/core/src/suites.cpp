#include "rbax/suites.hpp"

#include <set>
#include <utility>

#include "rbax/dendriform.hpp"
#include "rbax/enumerate.hpp"
#include "rbax/errors.hpp"
#include "rbax/finite_dendriform.hpp"
#include "rbax/morphism.hpp"
#include "rbax/oracles.hpp"
#include "rbax/parse.hpp"
#include "rbax/sampling.hpp"
#include "rbax/trees.hpp"

namespace rbax {

namespace {

using Outcome = std::pair<bool, std::string>;

struct Recorder {
  std::vector<PropertyResult> results;

  template <class Fn>
  void run(std::string name, Fn&& fn) {
    try {
      Outcome o = fn();
      results.push_back({std::move(name), o.first, std::move(o.second)});
    } catch (const std::exception& e) {
      results.push_back({std::move(name), false, std::string("exception: ") + e.what()});
    }
  }
};

std::string describe_triple(const FreeRba& ctx, const Word& a, const Word& b,
                            const Word& c) {
  const Alphabet& al = ctx.alphabet();
  return "(" + render_word(a, al) + " ; " + render_word(b, al) + " ; " +
         render_word(c, al) + ")";
}

void words_suite(Recorder& rec, const FreeRba& ctx, const SuiteConfig& cfg) {
  WordSampleConfig wcfg;

  rec.run("product-associativity", [&]() -> Outcome {
    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.trials; ++i) {
      Word a = random_word(rng, ctx.base(), wcfg);
      Word b = random_word(rng, ctx.base(), wcfg);
      Word c = random_word(rng, ctx.base(), wcfg);
      Element lhs = ctx.mul(ctx.mul_words(a, b), Element::single(c));
      Element rhs = ctx.mul(Element::single(a), ctx.mul_words(b, c));
      if (!(lhs == rhs)) {
        return {false, "fails on " + describe_triple(ctx, a, b, c)};
      }
    }
    return {true, std::to_string(cfg.trials) + " word triples"};
  });

  rec.run("operator-identity", [&]() -> Outcome {
    Rng rng(cfg.seed + 1);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      if (!ctx.is_zero(rb_residual(ctx, x, y))) {
        return {false, "fails on x = " + render_element(x, ctx.alphabet()) +
                           ", y = " + render_element(y, ctx.alphabet())};
      }
    }
    return {true, std::to_string(cfg.trials) + " element pairs"};
  });

  rec.run("product-shape", [&]() -> Outcome {
    Rng rng(cfg.seed + 2);
    int nonzero = 0;
    for (int i = 0; i < cfg.trials; ++i) {
      Word a = random_word(rng, ctx.base(), wcfg);
      Word b = random_word(rng, ctx.base(), wcfg);
      Element p = ctx.mul_words(a, b);
      if (p.is_zero()) continue;
      ++nonzero;
      std::size_t merged = a.tail() == b.head() ? 1 : 0;
      for (const auto& [w, c] : p.terms()) {
        if (w.head() != a.head() || w.tail() != b.tail() ||
            w.breadth() != a.breadth() + b.breadth() - merged) {
          return {false, "term " + render_word(w, ctx.alphabet()) +
                             " breaks the head/tail/breadth rule for " +
                             render_word(a, ctx.alphabet()) + " * " +
                             render_word(b, ctx.alphabet())};
        }
      }
    }
    return {true, std::to_string(nonzero) + " nonzero products"};
  });

  rec.run("depth-filtration", [&]() -> Outcome {
    Rng rng(cfg.seed + 3);
    for (int i = 0; i < cfg.trials; ++i) {
      Word a = random_word(rng, ctx.base(), wcfg);
      Word b = random_word(rng, ctx.base(), wcfg);
      for (const auto& [w, c] : ctx.mul_words(a, b).terms()) {
        if (w.depth() > a.depth() + b.depth()) {
          return {false, "depth " + std::to_string(w.depth()) + " term from depths " +
                             std::to_string(a.depth()) + " + " +
                             std::to_string(b.depth())};
        }
      }
    }
    return {true, std::to_string(cfg.trials) + " products"};
  });

  WordEnumConfig ecfg{cfg.max_n, cfg.max_n, 200000};

  rec.run("shape-classes", [&]() -> Outcome {
    std::vector<Word> words = enumerate_words(ctx.base(), ecfg);
    for (const Word& w : words) {
      bool odd = w.breadth() % 2 == 1;
      bool expected_odd = w.head() == w.tail();
      if (odd != expected_odd) {
        return {false, render_word(w, ctx.alphabet()) + " has impossible shape"};
      }
    }
    return {true, std::to_string(words.size()) + " words in four disjoint classes"};
  });

  rec.run("depth-monotone", [&]() -> Outcome {
    WordEnumConfig lo = ecfg;
    lo.max_depth = cfg.max_n > 0 ? cfg.max_n - 1 : 0;
    std::vector<Word> small = enumerate_words(ctx.base(), lo);
    std::vector<Word> big = enumerate_words(ctx.base(), ecfg);
    std::set<std::string> bigset;
    for (const Word& w : big) bigset.insert(render_word(w, ctx.alphabet()));
    for (const Word& w : small) {
      if (!bigset.count(render_word(w, ctx.alphabet()))) {
        return {false, render_word(w, ctx.alphabet()) + " missing at larger depth"};
      }
    }
    return {true, std::to_string(small.size()) + " words contained in " +
                      std::to_string(big.size())};
  });

  rec.run("parse-render-roundtrip", [&]() -> Outcome {
    std::vector<Word> words = enumerate_words(ctx.base(), ecfg);
    for (const Word& w : words) {
      std::string text = render_word(w, ctx.alphabet());
      Word back = parse_word(text, ctx.base());
      if (!(back == w)) {
        return {false, "round trip changes '" + text + "'"};
      }
    }
    return {true, std::to_string(words.size()) + " words"};
  });
}

void dendriform_suite(Recorder& rec, const FreeRba& ctx, const SuiteConfig& cfg) {
  WordSampleConfig wcfg;
  wcfg.max_depth = 1;
  wcfg.max_breadth = 2;

  DendOps<Element> tri = induced_trialgebra_ops(ctx);

  rec.run("trialgebra-axioms", [&]() -> Outcome {
    Rng rng(cfg.seed + 10);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      Element z = random_element(rng, ctx, wcfg);
      auto report = check_trialgebra(ctx, tri, x, y, z);
      if (!report.pass()) {
        return {false, report.first_failure()->axiom + " fails on random elements"};
      }
    }
    return {true, std::to_string(cfg.trials) + " triples, 7 axioms each"};
  });

  rec.run("dialgebra-axioms", [&]() -> Outcome {
    if (!ctx.weight().is_zero()) {
      return {true, "skipped: plain pair is a dialgebra only at weight 0"};
    }
    DendOps<Element> dia = induced_dialgebra_ops(ctx);
    Rng rng(cfg.seed + 11);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      Element z = random_element(rng, ctx, wcfg);
      auto report = check_dialgebra(ctx, dia, x, y, z);
      if (!report.pass()) {
        return {false, report.first_failure()->axiom + " fails on random elements"};
      }
    }
    return {true, std::to_string(cfg.trials) + " triples, 3 axioms each"};
  });

  rec.run("prime-dialgebra-axioms", [&]() -> Outcome {
    DendOps<Element> prime = induced_prime_dialgebra_ops(ctx);
    Rng rng(cfg.seed + 12);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      Element z = random_element(rng, ctx, wcfg);
      auto report = check_dialgebra(ctx, prime, x, y, z);
      if (!report.pass()) {
        return {false, report.first_failure()->axiom + " fails on random elements"};
      }
    }
    return {true, std::to_string(cfg.trials) + " triples, 3 axioms each"};
  });

  rec.run("star-associativity", [&]() -> Outcome {
    Rng rng(cfg.seed + 13);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      Element z = random_element(rng, ctx, wcfg);
      if (!ctx.is_zero(star_residual(ctx, tri, x, y, z))) {
        return {false, "recombined product fails associativity"};
      }
    }
    return {true, std::to_string(cfg.trials) + " triples"};
  });

  rec.run("to-dialgebra-prime-agreement", [&]() -> Outcome {
    DendOps<Element> collapsed = to_dialgebra(ctx, tri);
    DendOps<Element> prime = induced_prime_dialgebra_ops(ctx);
    Rng rng(cfg.seed + 14);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      if (!(collapsed.prec(x, y) == prime.prec(x, y)) ||
          !(collapsed.succ(x, y) == prime.succ(x, y))) {
        return {false, "collapsed operations disagree with the prime pair"};
      }
    }
    return {true, std::to_string(cfg.trials) + " pairs"};
  });

  rec.run("swapped-ops-counterexample", [&]() -> Outcome {
    DendOps<Element> swapped;
    swapped.prec = tri.succ;
    swapped.succ = tri.prec;
    swapped.dot = tri.dot;
    Rng rng(cfg.seed + 15);
    for (int i = 0; i < cfg.trials; ++i) {
      Element x = random_element(rng, ctx, wcfg);
      Element y = random_element(rng, ctx, wcfg);
      Element z = random_element(rng, ctx, wcfg);
      if (!check_trialgebra(ctx, swapped, x, y, z).pass()) {
        return {true, "axioms reject the swapped operations as expected"};
      }
    }
    return {false, "no counterexample found for the swapped operations"};
  });
}

template <RotaBaxterAlgebra A, class Sampler>
Outcome oracle_outcome(const A& alg, Sampler&& sample, int trials) {
  auto render = [&alg](const typename A::Element& e) { return alg.str(e); };
  OracleCheckReport r = check_rb_algebra(alg, sample, render, trials, trials / 4 + 1);
  return {r.pass, r.pass ? std::to_string(r.checked) + " checks" : r.witness};
}

void oracle_suite(Recorder& rec, const FreeRba& ctx, const SuiteConfig& cfg) {
  rec.run("sequence-operator-identity", [&]() -> Outcome {
    SequenceRba seq(6, ctx.weight());
    Rng rng(cfg.seed + 20);
    return oracle_outcome(seq, [&] { return random_sequence(rng, seq); }, cfg.trials);
  });

  rec.run("polynomial-operator-identity", [&]() -> Outcome {
    PolynomialRba poly;
    Rng rng(cfg.seed + 21);
    return oracle_outcome(poly, [&] { return random_polynomial(rng, poly, 4); },
                          cfg.trials);
  });

  rec.run("polynomial-truncated-identity", [&]() -> Outcome {
    PolynomialRba poly(3);
    Rng rng(cfg.seed + 22);
    return oracle_outcome(poly, [&] { return random_polynomial(rng, poly, 3); },
                          cfg.trials);
  });

  rec.run("sequence-splitting-axioms", [&]() -> Outcome {
    FiniteDendriform d = FiniteDendriform::sequence_trialgebra(4, ctx.weight());
    auto report = d.validate();
    return {report.pass(),
            report.pass() ? "all basis triples" : report.first_failure()->axiom};
  });

  rec.run("sequence-prime-splitting-axioms", [&]() -> Outcome {
    FiniteDendriform d = FiniteDendriform::sequence_prime_dialgebra(4, ctx.weight());
    auto report = d.validate();
    return {report.pass(),
            report.pass() ? "all basis triples" : report.first_failure()->axiom};
  });

  rec.run("polynomial-splitting-axioms", [&]() -> Outcome {
    FiniteDendriform d = FiniteDendriform::poly_dialgebra(3);
    auto report = d.validate();
    return {report.pass(),
            report.pass() ? "all basis triples" : report.first_failure()->axiom};
  });

  rec.run("morphism-respects-structure", [&]() -> Outcome {
    FreeRba free_ctx(BaseAlgebra::free_monoid(ctx.alphabet()), ctx.weight());
    SequenceRba seq(6, ctx.weight());
    Rng rng(cfg.seed + 23);
    std::vector<SequenceRba::Element> images;
    for (std::size_t i = 0; i < ctx.alphabet().size(); ++i) {
      images.push_back(random_sequence(rng, seq, 2));
    }
    RbaMorphism<SequenceRba> f(free_ctx, seq, images);
    WordSampleConfig wcfg;
    for (int i = 0; i < cfg.trials; ++i) {
      Element a = random_element(rng, free_ctx, wcfg);
      Element b = random_element(rng, free_ctx, wcfg);
      if (!equal(seq, f.apply(free_ctx.mul(a, b)), seq.mul(f.apply(a), f.apply(b)))) {
        return {false, "image of a product differs from the product of images"};
      }
      if (!equal(seq, f.apply(free_ctx.rb(a)), seq.rb(f.apply(a)))) {
        return {false, "image of the operator differs from the operator of the image"};
      }
    }
    return {true, std::to_string(cfg.trials) + " pairs"};
  });
}

void trees_suite(Recorder& rec, const FreeRba& ctx, const SuiteConfig& cfg) {
  const Alphabet& alphabet = ctx.alphabet();
  Alphabet unary(std::vector<std::string>{"o"});

  rec.run("binary-counts", [&]() -> Outcome {
    std::vector<std::size_t> catalan{1};
    for (std::size_t n = 1; n <= cfg.max_n; ++n) {
      std::size_t total = 0;
      for (std::size_t i = 0; i < n; ++i) total += catalan[i] * catalan[n - 1 - i];
      catalan.push_back(total);
    }
    for (std::size_t n = 0; n <= cfg.max_n; ++n) {
      std::size_t plain = enumerate_binary_trees(n, unary).size();
      if (plain != catalan[n]) {
        return {false, "undecorated count at grade " + std::to_string(n) + " is " +
                           std::to_string(plain) + ", recurrence gives " +
                           std::to_string(catalan[n])};
      }
      std::size_t decorated = enumerate_binary_trees(n, alphabet).size();
      std::size_t scale = 1;
      for (std::size_t i = 0; i < n; ++i) scale *= alphabet.size();
      if (decorated != catalan[n] * scale) {
        return {false, "decorated count at grade " + std::to_string(n) + " is off"};
      }
    }
    return {true, "grades 0.." + std::to_string(cfg.max_n)};
  });

  rec.run("planar-counts", [&]() -> Outcome {
    // s(1) = s(2) = 1, n s(n) = (6n-9) s(n-1) - (n-3) s(n-2); grade g uses s(g+1)
    std::vector<long long> s{0, 1, 1};
    for (std::size_t n = 3; n + 0 <= cfg.max_n + 1; ++n) {
      long long v = ((6 * (long long)n - 9) * s[n - 1] - ((long long)n - 3) * s[n - 2]) /
                    (long long)n;
      s.push_back(v);
    }
    for (std::size_t g = 0; g <= cfg.max_n; ++g) {
      std::size_t plain = enumerate_planar_trees(g, unary).size();
      if (plain != static_cast<std::size_t>(s[g + 1])) {
        return {false, "undecorated count at grade " + std::to_string(g) + " is " +
                           std::to_string(plain) + ", recurrence gives " +
                           std::to_string(s[g + 1])};
      }
      std::size_t decorated = enumerate_planar_trees(g, alphabet).size();
      std::size_t scale = 1;
      for (std::size_t i = 0; i < g; ++i) scale *= alphabet.size();
      if (decorated != plain * scale) {
        return {false, "decorated count at grade " + std::to_string(g) + " is off"};
      }
    }
    return {true, "grades 0.." + std::to_string(cfg.max_n)};
  });

  rec.run("binary-word-hom", [&]() -> Outcome {
    FreeRba zero_ctx(BaseAlgebra::zero_product(alphabet), Rational(0));
    Rng rng(cfg.seed + 30);
    for (int i = 0; i < cfg.trials; ++i) {
      BTreePtr s = random_btree(rng, alphabet, 1 + rng.below(2));
      BTreePtr t = random_btree(rng, alphabet, 1 + rng.below(2));
      for (DendKind kind : {DendKind::prec, DendKind::succ}) {
        Element image = phi_image(btree_op(kind, BTreeSum::single(s), BTreeSum::single(t)));
        Element direct = induced_op(zero_ctx, kind, Element::single(phi(s)),
                                    Element::single(phi(t)));
        if (!(image == direct)) {
          return {false, to_string(kind) + " disagrees on (" +
                             render_tree(*s, alphabet) + ", " + render_tree(*t, alphabet) +
                             ")"};
        }
      }
    }
    return {true, std::to_string(cfg.trials) + " pairs"};
  });

  rec.run("planar-word-hom", [&]() -> Outcome {
    FreeRba tensor_ctx(BaseAlgebra::free_monoid(alphabet), Rational(1));
    Rng rng(cfg.seed + 31);
    for (int i = 0; i < cfg.trials; ++i) {
      PTreePtr s = random_ptree(rng, alphabet, 1 + rng.below(2));
      PTreePtr t = random_ptree(rng, alphabet, 1 + rng.below(2));
      for (DendKind kind : {DendKind::prec, DendKind::succ, DendKind::dot}) {
        Element image = psi_image(ptree_op(kind, PTreeSum::single(s), PTreeSum::single(t)));
        Element direct = induced_op(tensor_ctx, kind, Element::single(psi(s)),
                                    Element::single(psi(t)));
        if (!(image == direct)) {
          return {false, to_string(kind) + " disagrees on (" +
                             render_tree(*s, alphabet) + ", " + render_tree(*t, alphabet) +
                             ")"};
        }
      }
    }
    return {true, std::to_string(cfg.trials) + " pairs"};
  });

  std::size_t image_n = cfg.max_n < 3 ? cfg.max_n : 3;

  rec.run("binary-image-characterization", [&]() -> Outcome {
    BaseAlgebra zero = BaseAlgebra::zero_product(alphabet);
    for (std::size_t n = 1; n <= image_n; ++n) {
      std::set<std::string> images;
      for (const BTreePtr& t : enumerate_binary_trees(n, alphabet)) {
        images.insert(render_word(phi(t), alphabet));
      }
      std::set<std::string> diwords;
      for (const Word& w : enumerate_words(zero, {n, n, 200000})) {
        if (w.letter_count() == n && is_diword(w)) {
          diwords.insert(render_word(w, alphabet));
        }
      }
      if (images != diwords) {
        return {false, "image set differs from the predicate set at grade " +
                           std::to_string(n)};
      }
      if (images.size() != enumerate_binary_trees(n, alphabet).size()) {
        return {false, "images collide at grade " + std::to_string(n)};
      }
    }
    return {true, "grades 1.." + std::to_string(image_n) + ", injective"};
  });

  rec.run("planar-image-characterization", [&]() -> Outcome {
    BaseAlgebra tensor = BaseAlgebra::free_monoid(alphabet);
    for (std::size_t n = 1; n <= image_n; ++n) {
      std::set<std::string> images;
      for (const PTreePtr& t : enumerate_planar_trees(n, alphabet)) {
        images.insert(render_word(psi(t), alphabet));
      }
      std::set<std::string> triwords;
      for (const Word& w : enumerate_words(tensor, {n, n, 200000})) {
        if (w.letter_count() == n && is_triword(w)) {
          triwords.insert(render_word(w, alphabet));
        }
      }
      if (images != triwords) {
        return {false, "image set differs from the predicate set at grade " +
                           std::to_string(n)};
      }
      if (images.size() != enumerate_planar_trees(n, alphabet).size()) {
        return {false, "images collide at grade " + std::to_string(n)};
      }
    }
    return {true, "grades 1.." + std::to_string(image_n) + ", injective"};
  });

  rec.run("binary-axioms", [&]() -> Outcome {
    DendOps<BTreeSum> ops = btree_ops();
    Rng rng(cfg.seed + 33);
    for (int i = 0; i < cfg.trials; ++i) {
      BTreeSum x = BTreeSum::single(random_btree(rng, alphabet, 1 + rng.below(3)));
      BTreeSum y = BTreeSum::single(random_btree(rng, alphabet, 1 + rng.below(3)));
      BTreeSum z = BTreeSum::single(random_btree(rng, alphabet, 1 + rng.below(2)));
      auto report = check_dialgebra(BTreeSpace{}, ops, x, y, z);
      if (!report.pass()) {
        return {false, report.first_failure()->axiom + " fails on random trees"};
      }
    }
    return {true, std::to_string(cfg.trials) + " triples, 3 axioms each"};
  });

  rec.run("planar-axioms", [&]() -> Outcome {
    DendOps<PTreeSum> ops = ptree_ops();
    Rng rng(cfg.seed + 34);
    for (int i = 0; i < cfg.trials; ++i) {
      PTreeSum x = PTreeSum::single(random_ptree(rng, alphabet, 1 + rng.below(3)));
      PTreeSum y = PTreeSum::single(random_ptree(rng, alphabet, 1 + rng.below(3)));
      PTreeSum z = PTreeSum::single(random_ptree(rng, alphabet, 1 + rng.below(2)));
      auto report = check_trialgebra(PTreeSpace{}, ops, x, y, z);
      if (!report.pass()) {
        return {false, report.first_failure()->axiom + " fails on random trees"};
      }
    }
    return {true, std::to_string(cfg.trials) + " triples, 7 axioms each"};
  });

  rec.run("star-unit", [&]() -> Outcome {
    Rng rng(cfg.seed + 32);
    BTreeSum bleaf = BTreeSum::single(BinaryTree::leaf());
    PTreeSum pleaf = PTreeSum::single(PlanarTree::leaf());
    for (int i = 0; i < cfg.trials; ++i) {
      BTreeSum bt = BTreeSum::single(random_btree(rng, alphabet, 1 + rng.below(3)));
      PTreeSum pt = PTreeSum::single(random_ptree(rng, alphabet, 1 + rng.below(3)));
      if (!(btree_star_unital(bleaf, bt) == bt) || !(btree_star_unital(bt, bleaf) == bt) ||
          !(ptree_star_unital(pleaf, pt) == pt) || !(ptree_star_unital(pt, pleaf) == pt)) {
        return {false, "leaf does not act as a unit"};
      }
    }
    return {true, std::to_string(cfg.trials) + " trees"};
  });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"words", "dendriform", "oracle", "trees"};
  return names;
}

std::vector<PropertyResult> run_suite(std::string_view name, const FreeRba& ctx,
                                      const SuiteConfig& cfg) {
  Recorder rec;
  if (name == "words") {
    words_suite(rec, ctx, cfg);
  } else if (name == "dendriform") {
    dendriform_suite(rec, ctx, cfg);
  } else if (name == "oracle") {
    oracle_suite(rec, ctx, cfg);
  } else if (name == "trees") {
    trees_suite(rec, ctx, cfg);
  } else {
    throw DomainError("unknown suite '" + std::string(name) + "'");
  }
  return rec.results;
}

}  // namespace rbax
