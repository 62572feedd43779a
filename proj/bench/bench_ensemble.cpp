#include <benchmark/benchmark.h>

#include <omp.h>

#include "hltasep/dehp.hpp"
#include "hltasep/ensemble.hpp"
#include "hltasep/enumerate.hpp"

using namespace hltasep;

namespace {

EnsembleSpec spec(std::int64_t replicas) {
  EnsembleSpec s;
  s.initial = OneShockSpec{1, 1, OneShockVariant::Eta};
  s.alpha = 0.4;
  s.times = {50.0, 100.0};
  s.replicas = static_cast<std::uint64_t>(replicas);
  s.seed = 3;
  s.observables = {observables::second_class_exists(), observables::height(Color::First, 1)};
  return s;
}

void BM_EnsembleSerial(benchmark::State& state) {
  const auto s = spec(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_ensemble_serial(s).values.data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EnsembleOpenMP(benchmark::State& state) {
  const auto s = spec(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(s).values.data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_WordSumSerial(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Rational a(3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_over_words_serial<Rational>(
        L, [](const BinaryWord&) { return true; }, [&](const BinaryWord& e) { return mpa_prob(e, a); }));
  }
}

void BM_WordSumOpenMP(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const Rational a(3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_over_words<Rational>(
        L, [](const BinaryWord&) { return true; }, [&](const BinaryWord& e) { return mpa_prob(e, a); }));
  }
}

}  // namespace

BENCHMARK(BM_EnsembleSerial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnsembleOpenMP)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordSumSerial)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WordSumOpenMP)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
