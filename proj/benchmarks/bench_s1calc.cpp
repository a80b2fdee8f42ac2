#include <benchmark/benchmark.h>

#include <random>

#include "s1calc/brieskorn.hpp"
#include "s1calc/dilation.hpp"
#include "s1calc/linalg.hpp"
#include "s1calc/spectral.hpp"

using namespace s1calc;

static SparseMatrix random_matrix(Index n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> value(-9, 9);
  std::vector<MatrixEntry> entries;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (keep(rng)) {
        Rational q(value(rng), 1 + static_cast<int>(j % 3));
        q.canonicalize();
        entries.push_back({i, j, q});
      }
  return SparseMatrix::from_entries(n, n, entries);
}

static void BM_Rref(benchmark::State& state) {
  const SparseMatrix m = random_matrix(static_cast<Index>(state.range(0)), 0.1, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(32)->Arg(64)->Arg(128);

static void BM_ZSpace(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const S1Complex c = milnor_model(k, 5, {.sphere_classes = false}).complex();
  for (auto _ : state) benchmark::DoNotOptimize(z_space(c, c.truncation()));
}
BENCHMARK(BM_ZSpace)->DenseRange(2, 5);

static void BM_MilnorOrders(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const SplitS1Complex s = milnor_model(k, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(order_of_dilation(s, s.truncation()));
    benchmark::DoNotOptimize(order_of_semidilation(s, s.truncation()));
  }
}
BENCHMARK(BM_MilnorOrders)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_MinCz(benchmark::State& state) {
  const BrieskornData a = one_dilation_exponents(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(global_min_cz(a, default_period_bound(a)));
}
BENCHMARK(BM_MinCz)->DenseRange(4, 10, 3);
BENCHMARK_MAIN();
