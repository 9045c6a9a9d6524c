#include <benchmark/benchmark.h>

#include "treelang/dyck.hpp"
#include "treelang/morphism.hpp"
#include "treelang/pda.hpp"
#include "treelang/pda_builders.hpp"
#include "treelang/series.hpp"

using namespace treelang;

static void BM_EnumerateDyck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t count = 0;
    visit_dyck(n, [&](const DyckWord&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateDyck)->DenseRange(8, 14, 2)->Complexity();

static void BM_HilbertDyckStarNorm(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_norm_series(order));
  }
}
BENCHMARK(BM_HilbertDyckStarNorm)->Arg(8)->Arg(10)->Arg(12)
    ->Unit(benchmark::kMillisecond);

static void BM_TreePdaLanguage(benchmark::State& state) {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const Pda pda = build_tree_pda(edge);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        enumerate_language(pda, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_TreePdaLanguage)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_PatternPdaBuild(benchmark::State& state) {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const MorphismWord pattern = parse_morphism_word("u0 d0 u1 u1 d1 d1", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_pattern_pda(pattern, edge));
  }
  state.SetLabel("worked example");
}
BENCHMARK(BM_PatternPdaBuild)->Unit(benchmark::kMillisecond);

static void BM_AcceptingRuns(benchmark::State& state) {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const Pda pda = build_tree_pda(edge);
  const MorphismWord w = parse_morphism_word(
      "u0 u0 u0 u0 d0 d0 u0 u0 u0 u0 d0 d0 u1 u1 d1 d1 d0 d0 d0 d0", 2);
  const std::vector<int> word = to_pda_word(pda, w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(accepting_runs(pda, word));
  }
}
BENCHMARK(BM_AcceptingRuns);

BENCHMARK_MAIN();
