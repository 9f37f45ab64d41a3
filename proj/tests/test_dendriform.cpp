#include <doctest.h>

#include <array>
#include <string>
#include <vector>

#include "rbax/dendriform.hpp"
#include "rbax/free_rba.hpp"
#include "rbax/parse.hpp"
#include "rbax/sampling.hpp"

using namespace rbax;

namespace {

FreeRba tensor_ctx(Rational weight) {
  Alphabet a({"x", "y", "z"});
  return FreeRba(BaseAlgebra::free_monoid(a), std::move(weight));
}

std::string apply(const FreeRba& ctx, DendKind kind, const std::string& a,
                  const std::string& b) {
  Element r = induced_op(ctx, kind, parse_element(a, ctx.base()),
                         parse_element(b, ctx.base()));
  return render_element(r, ctx.alphabet());
}

std::array<Element, 3> random_triple(Rng& rng, const FreeRba& ctx,
                                     const WordSampleConfig& wcfg) {
  return {random_element(rng, ctx, wcfg), random_element(rng, ctx, wcfg),
          random_element(rng, ctx, wcfg)};
}

}  // namespace

TEST_CASE("induced operations on words") {
  FreeRba ctx = tensor_ctx(Rational(2));
  CHECK(apply(ctx, DendKind::prec, "x", "y") == "x [y]");
  CHECK(apply(ctx, DendKind::succ, "x", "y") == "[x] y");
  CHECK(apply(ctx, DendKind::dot, "x", "y") == "2*x.y");
  CHECK(apply(ctx, DendKind::prec_prime, "x", "y") == "x [y] + 2*x.y");
  CHECK(apply(ctx, DendKind::star, "x", "y") == "[x] y + x [y] + 2*x.y");
  CHECK(apply(ctx, DendKind::prec, "[x]", "y") == "[[x] y] + [x [y]] + 2*[x.y]");
  CHECK(apply(ctx, DendKind::succ, "[x]", "y") == "[[x]] y");
}

TEST_CASE("prime operation equals plain plus dot") {
  FreeRba ctx = tensor_ctx(Rational(-3, 2));
  WordSampleConfig wcfg;
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    Element a = random_element(rng, ctx, wcfg);
    Element b = random_element(rng, ctx, wcfg);
    Element prime = induced_op(ctx, DendKind::prec_prime, a, b);
    Element plain = induced_op(ctx, DendKind::prec, a, b);
    Element dot = induced_op(ctx, DendKind::dot, a, b);
    CHECK(prime == plain + dot);
  }
}

TEST_CASE("operator image of a star product equals the product of operator images") {
  FreeRba ctx = tensor_ctx(Rational(1));
  WordSampleConfig wcfg;
  Rng rng(29);
  DendOps<Element> tri = induced_trialgebra_ops(ctx);
  for (int i = 0; i < 60; ++i) {
    Element a = random_element(rng, ctx, wcfg);
    Element b = random_element(rng, ctx, wcfg);
    CHECK(ctx.rb(tri.star(a, b, ctx)) == ctx.mul(ctx.rb(a), ctx.rb(b)));
    CHECK(induced_op(ctx, DendKind::star, a, b) == tri.star(a, b, ctx));
  }
}

TEST_CASE("trialgebra axioms hold for the induced operations") {
  for (Rational weight : {Rational(0), Rational(1), Rational(-1), Rational(5, 3)}) {
    FreeRba ctx = tensor_ctx(weight);
    DendOps<Element> ops = induced_trialgebra_ops(ctx);
    WordSampleConfig wcfg;
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
      auto [x, y, z] = random_triple(rng, ctx, wcfg);
      auto report = check_trialgebra(ctx, ops, x, y, z);
      REQUIRE(report.checks.size() == 7);
      if (const auto* fail = report.first_failure()) {
        INFO(fail->axiom);
        CHECK(report.pass());
      }
      CHECK(ctx.is_zero(star_residual(ctx, ops, x, y, z)));
    }
  }
}

TEST_CASE("plain pair forms a dialgebra exactly at weight zero") {
  WordSampleConfig wcfg;
  {
    FreeRba ctx = tensor_ctx(Rational(0));
    DendOps<Element> ops = induced_dialgebra_ops(ctx);
    Rng rng(37);
    for (int i = 0; i < 30; ++i) {
      auto [x, y, z] = random_triple(rng, ctx, wcfg);
      auto report = check_dialgebra(ctx, ops, x, y, z);
      REQUIRE(report.checks.size() == 3);
      CHECK(report.pass());
    }
  }
  {
    FreeRba ctx = tensor_ctx(Rational(1));
    DendOps<Element> ops = induced_dialgebra_ops(ctx);
    Rng rng(37);
    bool found_failure = false;
    for (int i = 0; i < 30 && !found_failure; ++i) {
      auto [x, y, z] = random_triple(rng, ctx, wcfg);
      found_failure = !check_dialgebra(ctx, ops, x, y, z).pass();
    }
    CHECK(found_failure);
  }
}

TEST_CASE("prime pair forms a dialgebra for every weight") {
  for (Rational weight : {Rational(0), Rational(1), Rational(-1), Rational(7, 4)}) {
    FreeRba ctx = tensor_ctx(weight);
    DendOps<Element> ops = induced_prime_dialgebra_ops(ctx);
    WordSampleConfig wcfg;
    Rng rng(41);
    for (int i = 0; i < 30; ++i) {
      auto [x, y, z] = random_triple(rng, ctx, wcfg);
      auto report = check_dialgebra(ctx, ops, x, y, z);
      if (const auto* fail = report.first_failure()) {
        INFO(fail->axiom);
        CHECK(report.pass());
      }
    }
  }
}

TEST_CASE("swapping the two one-sided operations breaks the axioms") {
  FreeRba ctx = tensor_ctx(Rational(1));
  DendOps<Element> tri = induced_trialgebra_ops(ctx);
  DendOps<Element> swapped;
  swapped.prec = tri.succ;
  swapped.succ = tri.prec;
  swapped.dot = tri.dot;
  WordSampleConfig wcfg;
  Rng rng(43);
  bool found_failure = false;
  for (int i = 0; i < 30 && !found_failure; ++i) {
    auto [x, y, z] = random_triple(rng, ctx, wcfg);
    found_failure = !check_trialgebra(ctx, swapped, x, y, z).pass();
  }
  CHECK(found_failure);
}

TEST_CASE("dot is rejected in a dialgebra context") {
  FreeRba ctx = tensor_ctx(Rational(1));
  Element x = parse_element("x", ctx.base());
  CHECK_THROWS_WITH_AS(induced_op(ctx, DendKind::dot, x, x, DendContext::dialgebra),
                       "dot operation is not part of a dialgebra", DomainError);
  CHECK(induced_op(ctx, DendKind::prec_prime, x, x, DendContext::dialgebra) ==
        induced_op(ctx, DendKind::prec_prime, x, x));
}

TEST_CASE("mismatched operation sets are rejected by the axiom checkers") {
  FreeRba ctx = tensor_ctx(Rational(1));
  Element x = parse_element("x", ctx.base());
  CHECK_THROWS_AS(check_dialgebra(ctx, induced_trialgebra_ops(ctx), x, x, x),
                  DomainError);
  CHECK_THROWS_AS(check_trialgebra(ctx, induced_dialgebra_ops(ctx), x, x, x),
                  DomainError);
}

TEST_CASE("every three-piece splitting yields a two-piece one") {
  FreeRba ctx = tensor_ctx(Rational(3));
  WordSampleConfig wcfg;
  Rng rng(47);
  std::vector<std::array<Element, 3>> samples;
  for (int i = 0; i < 8; ++i) samples.push_back(random_triple(rng, ctx, wcfg));
  DendOps<Element> derived = to_dialgebra(ctx, induced_trialgebra_ops(ctx), samples);
  DendOps<Element> direct = induced_prime_dialgebra_ops(ctx);
  CHECK_FALSE(derived.has_dot());
  for (int i = 0; i < 30; ++i) {
    Element a = random_element(rng, ctx, wcfg);
    Element b = random_element(rng, ctx, wcfg);
    CHECK(derived.prec(a, b) == direct.prec(a, b));
    CHECK(derived.succ(a, b) == direct.succ(a, b));
  }
}

TEST_CASE("the dialgebra construction rejects broken input operations") {
  FreeRba ctx = tensor_ctx(Rational(1));
  WordSampleConfig wcfg;
  Rng rng(53);
  std::vector<std::array<Element, 3>> samples;
  for (int i = 0; i < 8; ++i) samples.push_back(random_triple(rng, ctx, wcfg));

  DendOps<Element> broken = induced_trialgebra_ops(ctx);
  broken.dot = [&ctx](const Element& a, const Element& b) {
    return induced_op(ctx, DendKind::succ, a, b);
  };
  CHECK_THROWS_AS(to_dialgebra(ctx, broken, samples), DomainError);
  CHECK_THROWS_AS(to_dialgebra(ctx, induced_dialgebra_ops(ctx), samples), DomainError);
}

TEST_CASE("operation names round-trip") {
  CHECK(to_string(DendKind::prec) == "prec");
  CHECK(to_string(DendKind::succ) == "succ");
  CHECK(to_string(DendKind::dot) == "dot");
  CHECK(parse_dend_kind("prec") == DendKind::prec);
  CHECK(parse_dend_kind("prec_prime") == DendKind::prec_prime);
  CHECK(parse_dend_kind("star") == DendKind::star);
  CHECK_THROWS_AS(parse_dend_kind("shuffle"), DomainError);
}
