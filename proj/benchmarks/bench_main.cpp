#include <benchmark/benchmark.h>

#include "asep2/generator.hpp"
#include "asep2/laurent.hpp"
#include "asep2/measure.hpp"
#include "asep2/simulation.hpp"
#include "asep2/symmetry.hpp"

using namespace asep2;

static void BM_PolyMultiply(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  LaurentPoly a, b;
  for (int k = -n; k <= n; ++k) {
    a += LaurentPoly::monomial(Rational(k + 2 * n + 1, 3), k);
    b += LaurentPoly::monomial(Rational(1, n + k + 7), 2 * k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(4)->Arg(16)->Arg(64);

static void BM_GeneratorBuild(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generator({L, 1}));
}
BENCHMARK(BM_GeneratorBuild)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

static void BM_SimilarityCheck(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  const SymmetryContext ctx = make_symmetry_context(L);
  for (auto _ : state) benchmark::DoNotOptimize(verify_similarity(ctx));
}
BENCHMARK(BM_SimilarityCheck)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DetailedBalance(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_detailed_balance(L));
}
BENCHMARK(BM_DetailedBalance)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SimulationSteps(benchmark::State& state) {
  SimConfig cfg;
  cfg.L = static_cast<int>(state.range(0));
  cfg.sector = {cfg.L / 3, cfg.L / 3};
  cfg.q0 = 1.5;
  cfg.n_events = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(run(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(*cfg.n_events));
}
BENCHMARK(BM_SimulationSteps)->Arg(3)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
