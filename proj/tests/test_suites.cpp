#include <doctest.h>

#include <string>

#include "rbax/errors.hpp"
#include "rbax/suites.hpp"

using namespace rbax;

namespace {

FreeRba ctx_for(BaseKind kind, Rational weight) {
  Alphabet a({"x", "y", "z"});
  BaseAlgebra base = kind == BaseKind::zero_product ? BaseAlgebra::zero_product(a)
                                                    : BaseAlgebra::free_monoid(a);
  return FreeRba(std::move(base), std::move(weight));
}

}  // namespace

TEST_CASE("every suite passes over both bases and several weights") {
  SuiteConfig cfg;
  cfg.trials = 40;
  cfg.seed = 1;
  cfg.max_n = 3;
  for (BaseKind kind : {BaseKind::zero_product, BaseKind::free_monoid}) {
    for (Rational weight : {Rational(0), Rational(1), Rational(-1), Rational(1, 2)}) {
      FreeRba ctx = ctx_for(kind, weight);
      for (const std::string& name : suite_names()) {
        auto results = run_suite(name, ctx, cfg);
        CHECK_FALSE(results.empty());
        for (const auto& r : results) {
          INFO(name, "/", r.name, ": ", r.detail);
          CHECK(r.pass);
        }
      }
    }
  }
}

TEST_CASE("suite results are deterministic in the seed") {
  SuiteConfig cfg;
  cfg.trials = 25;
  cfg.seed = 42;
  FreeRba ctx = ctx_for(BaseKind::free_monoid, Rational(1));
  auto a = run_suite("words", ctx, cfg);
  auto b = run_suite("words", ctx, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].detail == b[i].detail);
  }
}

TEST_CASE("unknown suite names are rejected") {
  FreeRba ctx = ctx_for(BaseKind::zero_product, Rational(0));
  CHECK_THROWS_AS(run_suite("nonsense", ctx, SuiteConfig{}), DomainError);
}
