#include <benchmark/benchmark.h>

#include "tas/generate.hpp"
#include "tas/harness.hpp"

using namespace tas;

namespace {

const std::vector<TileSystem>& corpus() {
  static const std::vector<TileSystem> c = [] {
    GeneratorConfig cfg;
    cfg.max_tiles = 4;
    cfg.alphabet = 3;
    cfg.samples = 2000;
    cfg.rng_seed = 5;
    return generate_systems(cfg);
  }();
  return c;
}

const Scope& scope() {
  static const Scope s = default_scope(40, 1);
  return s;
}

void classify_corpus_bench(benchmark::State& st, Exec exec) {
  for (auto _ : st) benchmark::DoNotOptimize(classify_corpus(corpus(), exec));
  st.SetItemsProcessed(st.iterations() * long(corpus().size()));
}

void cut_suite_bench(benchmark::State& st, Exec exec) {
  for (auto _ : st) benchmark::DoNotOptimize(run_suite("cuts", scope(), {}, exec));
}

}  // namespace

BENCHMARK_CAPTURE(classify_corpus_bench, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(classify_corpus_bench, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(cut_suite_bench, serial, Exec::Serial)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(cut_suite_bench, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
