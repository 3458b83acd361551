#include <benchmark/benchmark.h>

#include "s1fix/decider.hpp"
#include "s1fix/enumeration.hpp"
#include "s1fix/invariants.hpp"
#include "s1fix/multigraph.hpp"

namespace {

using namespace s1fix;

void BM_Enumerate(benchmark::State& state) {
  const EnumerationBounds b{static_cast<std::size_t>(state.range(0)), static_cast<Weight>(state.range(1))};
  std::size_t entries = 0;
  for (auto _ : state) {
    const Corpus c = enumerate(b);
    entries = c.size();
    benchmark::DoNotOptimize(entries);
  }
  state.counters["entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_Enumerate)->Args({4, 6})->Args({5, 8})->Args({6, 10})->Args({7, 12})->Unit(benchmark::kMillisecond);

void BM_DecideUniverse(benchmark::State& state) {
  const auto universe = candidate_universe({4, 6});
  for (auto _ : state) {
    std::size_t accepted = 0;
    for (const auto& d : universe) accepted += decide(d).realizable;
    benchmark::DoNotOptimize(accepted);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * universe.size()));
}
BENCHMARK(BM_DecideUniverse)->Unit(benchmark::kMillisecond);

void BM_DecideCorpus(benchmark::State& state) {
  const Corpus corpus = enumerate({7, 12});
  for (auto _ : state) {
    for (const auto& e : corpus) benchmark::DoNotOptimize(decide(e.data));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
}
BENCHMARK(BM_DecideCorpus)->Unit(benchmark::kMillisecond);

void BM_SeriesCheck(benchmark::State& state) {
  const Corpus corpus = enumerate({static_cast<std::size_t>(state.range(0)), 8});
  for (auto _ : state) {
    for (const auto& e : corpus) benchmark::DoNotOptimize(signature_series_check(e.data));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
}
BENCHMARK(BM_SeriesCheck)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GraphLoop(benchmark::State& state) {
  const Corpus corpus = enumerate({6, 10});
  for (auto _ : state) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto g = graph_of(corpus.trace(i));
      benchmark::DoNotOptimize(check_properties(g));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * corpus.size()));
}
BENCHMARK(BM_GraphLoop)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
