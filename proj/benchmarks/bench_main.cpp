#include <benchmark/benchmark.h>

#include "schubert/demazure.hpp"
#include "schubert/filtration.hpp"
#include "schubert/straighten.hpp"
#include "schubert/tableau.hpp"

using namespace schubert;

static void BM_Bareiss(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RandomSource rng(1);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(rng.uniform(-50, 50));
  for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Bareiss)->Arg(6)->Arg(10)->Arg(14);

static void BM_EnumerateAdmissible(benchmark::State& state) {
  auto top = reduced_chain(static_cast<int>(state.range(0)), 1).front();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_admissible(top));
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(3)->Arg(4);

static void BM_Straighten(benchmark::State& state) {
  Context ctx{3, 1};
  for (auto _ : state) {
    Straightener st(ctx);
    benchmark::DoNotOptimize(st.straighten({1, 4, 9}));
  }
}
BENCHMARK(BM_Straighten);

static void BM_DemazureDimension(benchmark::State& state) {
  auto top = reduced_chain(static_cast<int>(state.range(0)), 1).front();
  for (auto _ : state) {
    RandomSource rng(7);
    benchmark::DoNotOptimize(demazure_dimension(top, rng));
  }
}
BENCHMARK(BM_DemazureDimension)->Arg(2)->Arg(3);

static void BM_FiltrationDimension(benchmark::State& state) {
  for (auto _ : state) {
    RandomSource rng(11);
    benchmark::DoNotOptimize(
        filtration_dimension({2, 1}, static_cast<int>(state.range(0)), rng));
  }
}
BENCHMARK(BM_FiltrationDimension)->Arg(1)->Arg(2);

static void BM_KostkaFoulkes(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kostka_foulkes({3, 2, 1}, {1, 1, 1, 1, 1, 1}));
}
BENCHMARK(BM_KostkaFoulkes);

BENCHMARK_MAIN();
