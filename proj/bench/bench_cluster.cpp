// Serial reference kernel vs the OpenMP kernel on a synthetic population.
//   bench_cluster --benchmark_filter=Parallel

#include <benchmark/benchmark.h>

#include <cstdlib>
#include <memory>

#include "oeuvre/clustering.hpp"
#include "oeuvre/synth.hpp"

namespace {

using namespace oeuvre;

struct World {
  Corpus corpus;
  CitationIndex index;
  std::unique_ptr<ScoringContext> ctx;

  explicit World(std::size_t researchers) {
    synth::PopulationOptions opts;
    opts.researchers = researchers;
    corpus = Corpus::from_publications(synth::generate_population(opts).publications);
    index = CitationIndex::build(corpus);
    ctx = std::make_unique<ScoringContext>(corpus, index);
  }
};

const World& world() {
  static const World w([] {
    const char* env = std::getenv("OEUVRE_BENCH_RESEARCHERS");
    return env ? static_cast<std::size_t>(std::atoi(env)) : std::size_t{400};
  }());
  return w;
}

std::size_t pairs(const ScoringContext& ctx) {
  std::size_t n = 0;
  for (const auto& b : ctx.blocks()) n += b.size() * (b.size() - 1) / 2;
  return n;
}

void BM_Serial(benchmark::State& state) {
  const auto& w = world();
  ClusterOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(cluster_blocks_serial(*w.ctx, opts));
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(pairs(*w.ctx)), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Parallel(benchmark::State& state) {
  const auto& w = world();
  ClusterOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cluster_blocks_parallel(*w.ctx, opts));
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(pairs(*w.ctx)), benchmark::Counter::kIsIterationInvariantRate);
}

}  // namespace

BENCHMARK(BM_Serial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
