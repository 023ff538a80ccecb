#include <random>

#include <benchmark/benchmark.h>

#include "qpbraid/garside.hpp"
#include "qpbraid/mcg.hpp"
#include "qpbraid/quasipositivity.hpp"
#include "qpbraid/sl2.hpp"
#include "qpbraid/standard_form.hpp"

using namespace qpbraid;

namespace {

BraidWord random_word(std::mt19937_64& rng, std::int64_t length) {
  std::uniform_int_distribution<int> pick(0, 3);
  BraidWord w;
  for (std::int64_t i = 0; i < length; ++i) {
    const int x = pick(rng);
    w.append(x < 2 ? Generator::Sigma1 : Generator::Sigma2, x % 2 == 0 ? 1 : -1);
  }
  return w;
}

std::vector<BraidWord> corpus(std::int64_t length) {
  std::mt19937_64 rng(20240611);
  std::vector<BraidWord> words;
  for (int i = 0; i < 256; ++i) words.push_back(random_word(rng, length));
  return words;
}

}  // namespace

static void BM_GarsideNF(benchmark::State& state) {
  const auto words = corpus(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(garside_nf(words[i++ % words.size()]));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GarsideNF)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

static void BM_Sl2Image(benchmark::State& state) {
  const auto words = corpus(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl2_image(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_Sl2Image)->RangeMultiplier(4)->Range(8, 2048);

static void BM_Reduce(benchmark::State& state) {
  const auto words = corpus(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce(words[i++ % words.size()]));
  }
}
BENCHMARK(BM_Reduce)->RangeMultiplier(4)->Range(8, 512);

static void BM_FamilyVerdict(benchmark::State& state) {
  const auto beta = make_beta(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(beta));
  }
}
BENCHMARK(BM_FamilyVerdict)->Arg(0)->Arg(10)->Arg(50);

static void BM_SearchBandProduct(benchmark::State& state) {
  // Three bands with short conjugators.
  const auto w = parse_braid("s2 s1 s2^-1 s1^-1 s2 s1 s1 s2^-1 s1 s2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_qp(w, {2, 1'000'000}));
  }
}
BENCHMARK(BM_SearchBandProduct);

BENCHMARK_MAIN();
