#include <random>

#include <benchmark/benchmark.h>

#include "cohesion/cohesion.hpp"
#include "cohesion/synthetic.hpp"

using namespace cohesion;

namespace {

const Document& demo() {
  static const Document doc = [] {
    const auto abs = synth::generate_abstract(synth::CorpusParams{}, 2024);
    return synth::realize(abs, synth::make_language("de", abs.lemma_count, 7), {}, "de");
  }();
  return doc;
}

AnalysisConfig config(AnalysisMode mode) {
  AnalysisConfig cfg;
  cfg.mode = mode;
  return cfg;
}

void BM_Tokenize(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& seg : demo().segments) n += tokenize(seg).size();
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Tokenize)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto cfg = config(static_cast<AnalysisMode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_document(demo(), cfg));
}
BENCHMARK(BM_Analyze)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Signal(benchmark::State& state) {
  const auto cfg = config(static_cast<AnalysisMode>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_signal(demo(), cfg));
}
BENCHMARK(BM_Signal)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ReplaceTokens(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(synth::replace_tokens(demo(), 0.3, ++seed));
}
BENCHMARK(BM_ReplaceTokens)->Unit(benchmark::kMillisecond);

std::vector<double> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return v;
}

void BM_Lowpass(benchmark::State& state) {
  const auto v = random_signal(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(lowpass(v, {FilterKind::Hamming, 9}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Lowpass)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_CrossCorrelate(benchmark::State& state) {
  const auto x = random_signal(static_cast<std::size_t>(state.range(0)), 2);
  const auto y = random_signal(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(cross_correlate(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossCorrelate)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_DetectBoundaries(benchmark::State& state) {
  const auto v = random_signal(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(detect_boundaries(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DetectBoundaries)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_CompareBoundaries(benchmark::State& state) {
  std::vector<BoundarySet> sets;
  for (std::uint64_t d = 0; d < 3; ++d) sets.push_back(detect_boundaries(random_signal(2000, 10 + d)));
  for (auto _ : state) benchmark::DoNotOptimize(compare_boundaries(sets));
}
BENCHMARK(BM_CompareBoundaries)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
