#include <benchmark/benchmark.h>

#include <random>

#include "arcforge/arcs.hpp"
#include "arcforge/curve.hpp"
#include "arcforge/families.hpp"

using namespace arcforge;

static void BM_FieldMul(benchmark::State& state) {
  const auto f = Field::create(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::mt19937_64 rng(1);
  std::vector<Elem> xs(4096);
  for (auto& x : xs) x = static_cast<Elem>(rng() % f->q());
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = f->mul(acc, x) | 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({3, 3})->Args({2, 10})->Args({3, 12});

static void BM_FieldAdd(benchmark::State& state) {
  const auto f = Field::create(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::mt19937_64 rng(2);
  std::vector<Elem> xs(4096);
  for (auto& x : xs) x = static_cast<Elem>(rng() % f->q());
  Elem acc = 0;
  for (auto _ : state) {
    for (Elem x : xs) acc = f->add(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldAdd)->Args({3, 3})->Args({2, 10});

static void BM_RationalPoints(benchmark::State& state) {
  const auto inst = build_fermat_d(3, static_cast<int>(state.range(0)), 1, std::vector<int>{1}, std::vector<int>{1});
  for (auto _ : state) benchmark::DoNotOptimize(rational_point_indices(*inst.curve));
}
BENCHMARK(BM_RationalPoints)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SecantDistribution(benchmark::State& state) {
  const auto inst = build_fermat_qm1(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(secant_distribution(inst.arc));
}
BENCHMARK(BM_SecantDistribution)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Completeness(benchmark::State& state) {
  const auto inst = build_fermat_d(3, static_cast<int>(state.range(0)), 1, std::vector<int>{1}, std::vector<int>{1});
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(completeness_check(inst.arc, workers));
}
BENCHMARK(BM_Completeness)->Args({3, 1})->Args({4, 1})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_FrobeniusTest(benchmark::State& state) {
  const auto inst = build_fermat_d(3, 3, 1, std::vector<int>{1}, std::vector<int>{1});
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_nonclassical_test(*inst.curve).nonclassical);
}
BENCHMARK(BM_FrobeniusTest)->Unit(benchmark::kMillisecond);

static void BM_EpsilonEstimate(benchmark::State& state) {
  const auto inst = build_hermitian(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_estimate(*inst.curve).epsilon);
}
BENCHMARK(BM_EpsilonEstimate)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
