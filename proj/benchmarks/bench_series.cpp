// Benchmarks for the exact series kernels at and slightly above desk scale.

#include <benchmark/benchmark.h>

#include <random>

#include "uconf/exotic.hpp"
#include "uconf/oracle.hpp"
#include "uconf/power.hpp"
#include "uconf/spaces.hpp"

using namespace uconf;

namespace {

IntSeries random_series(std::mt19937& rng, const DegreeBound& bound, bool unit_constant) {
  std::uniform_int_distribution<int> dist(-3, 3);
  IntSeries f(bound);
  for (const MultiIndex& k : bound.indices()) f.set(k, BigInt(dist(rng)));
  if (unit_constant) f.set(MultiIndex::zero(bound.vars()), 1);
  return f;
}

void BM_series_mul(benchmark::State& state) {
  std::mt19937 rng(1);
  const DegreeBound bound = DegreeBound::uniform(2, static_cast<int>(state.range(0)));
  const IntSeries f = random_series(rng, bound, false);
  const IntSeries g = random_series(rng, bound, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_series_mul)->Arg(8)->Arg(12)->Arg(16);

void BM_series_inverse(benchmark::State& state) {
  std::mt19937 rng(2);
  const DegreeBound bound = DegreeBound::uniform(2, static_cast<int>(state.range(0)));
  const IntSeries f = random_series(rng, bound, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.inverse());
  }
}
BENCHMARK(BM_series_inverse)->Arg(8)->Arg(12);

void BM_series_int_pow(benchmark::State& state) {
  const DegreeBound bound = DegreeBound::uniform(1, 30);
  IntSeries f = IntSeries::one(bound);
  f.set(MultiIndex{1}, 1);
  const BigInt n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pow(f, n));
  }
}
BENCHMARK(BM_series_int_pow)->Arg(100)->Arg(10000);

void BM_factorize(benchmark::State& state) {
  std::mt19937 rng(3);
  const DegreeBound bound = DegreeBound::uniform(2, static_cast<int>(state.range(0)));
  const IntSeries f = random_series(rng, bound, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(f));
  }
}
BENCHMARK(BM_factorize)->Arg(6)->Arg(8);

void BM_pow_by_poly(benchmark::State& state) {
  std::mt19937 rng(4);
  const DegreeBound bound = DegreeBound::uniform(2, static_cast<int>(state.range(0)));
  const IntSeries f = random_series(rng, bound, true);
  const BivarPoly e = parse_poly("1 - u - v + u*v");
  for (auto _ : state) {
    benchmark::DoNotOptimize(pow(f, e));
  }
}
BENCHMARK(BM_pow_by_poly)->Arg(4)->Arg(6);

void BM_symmetric_product_series(benchmark::State& state) {
  const DegreeBound bound = DegreeBound::uniform(1, static_cast<int>(state.range(0)));
  const BivarPoly e = parse_poly("1 + u*v");
  for (auto _ : state) {
    benchmark::DoNotOptimize(hodge_deligne_series(symmetric_set(), e, bound));
  }
}
BENCHMARK(BM_symmetric_product_series)->Arg(16)->Arg(24);

void BM_enumerate_collections(benchmark::State& state) {
  const DegreeBound bound = DegreeBound::uniform(2, 4);
  const ColorCountSet set = nested_set(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_collections(state.range(0), set, bound));
  }
}
BENCHMARK(BM_enumerate_collections)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
