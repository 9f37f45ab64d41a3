#include <benchmark/benchmark.h>

#include <vector>

#include "rbax/enumerate.hpp"
#include "rbax/enveloping.hpp"
#include "rbax/free_rba.hpp"
#include "rbax/oracles.hpp"
#include "rbax/sampling.hpp"
#include "rbax/trees.hpp"

using namespace rbax;

namespace {

FreeRba tensor_ctx(Rational weight = Rational(1)) {
  return FreeRba(BaseAlgebra::free_monoid(Alphabet({"x", "y", "z"})), std::move(weight));
}

std::vector<Word> sample_words(std::size_t count, std::size_t depth) {
  FreeRba ctx = tensor_ctx();
  Rng rng(1);
  WordSampleConfig wcfg;
  wcfg.max_depth = depth;
  wcfg.max_breadth = 3;
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_word(rng, ctx.base(), wcfg));
  return out;
}

void bm_word_product(benchmark::State& state) {
  FreeRba ctx = tensor_ctx();
  std::vector<Word> words = sample_words(64, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const Word& a = words[i % words.size()];
    const Word& b = words[(i + 17) % words.size()];
    benchmark::DoNotOptimize(ctx.mul_words(a, b));
    ++i;
  }
}
BENCHMARK(bm_word_product)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void bm_operator_identity_residual(benchmark::State& state) {
  FreeRba ctx = tensor_ctx();
  std::vector<Word> words = sample_words(64, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    Element a = Element::single(words[i % words.size()]);
    Element b = Element::single(words[(i + 29) % words.size()]);
    benchmark::DoNotOptimize(rb_residual(ctx, a, b));
    ++i;
  }
}
BENCHMARK(bm_operator_identity_residual);

void bm_enumerate_words(benchmark::State& state) {
  BaseAlgebra base = BaseAlgebra::zero_product(Alphabet({"x", "y"}));
  WordEnumConfig cfg;
  cfg.max_letters = static_cast<std::size_t>(state.range(0));
  cfg.max_depth = cfg.max_letters;
  cfg.cap = 2000000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_words(base, cfg));
  }
}
BENCHMARK(bm_enumerate_words)->Arg(2)->Arg(3)->Arg(4);

void bm_enumerate_binary_trees(benchmark::State& state) {
  Alphabet two({"x", "y"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_binary_trees(static_cast<std::size_t>(state.range(0)), two));
  }
}
BENCHMARK(bm_enumerate_binary_trees)->Arg(3)->Arg(5)->Arg(7);

void bm_enumerate_planar_trees(benchmark::State& state) {
  Alphabet two({"x", "y"});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_planar_trees(static_cast<std::size_t>(state.range(0)), two));
  }
}
BENCHMARK(bm_enumerate_planar_trees)->Arg(3)->Arg(5)->Arg(6);

void bm_planar_word_images(benchmark::State& state) {
  Alphabet two({"x", "y"});
  auto trees = enumerate_planar_trees(static_cast<std::size_t>(state.range(0)), two);
  for (auto _ : state) {
    for (const PTreePtr& t : trees) benchmark::DoNotOptimize(psi(t));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trees.size()));
}
BENCHMARK(bm_planar_word_images)->Arg(4)->Arg(5);

void bm_envelope_sequence(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  FiniteDendriform d = FiniteDendriform::sequence_trialgebra(n, Rational(1));
  FreeRba ctx = tri_envelope_context(d, Rational(1));
  SequenceRba oracle(n, Rational(1));
  std::vector<SequenceRba::Element> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(oracle.basis(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_envelope(d, ctx, oracle, images));
  }
}
BENCHMARK(bm_envelope_sequence)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
