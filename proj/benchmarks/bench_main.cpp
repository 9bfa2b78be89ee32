#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "cupcap/constructions.hpp"
#include "cupcap/extremal.hpp"
#include "cupcap/relative.hpp"

using namespace cupcap;

namespace {

PointSet random_set(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  PointSet p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(d(rng), d(rng));
  return shear_distinct_x(p);
}

void BM_PairLabels(benchmark::State& state) {
  PointSet p = random_set(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pair_labels(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairLabels)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_MaxConvexSubset(benchmark::State& state) {
  PointSet p = random_set(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(max_convex_subset(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxConvexSubset)->RangeMultiplier(2)->Range(16, 64)->Complexity();

void BM_MaxCollinear(benchmark::State& state) {
  PointSet p = random_set(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(max_collinear(p));
}
BENCHMARK(BM_MaxCollinear)->RangeMultiplier(2)->Range(64, 512);

void BM_BuildX(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_X(3, k, k));
}
BENCHMARK(BM_BuildX)->DenseRange(5, 9);

void BM_VerifyX(benchmark::State& state) {
  int k = static_cast<int>(state.range(0));
  PointSet x = build_X(3, k, k);
  for (auto _ : state) benchmark::DoNotOptimize(verify_construction(x, Claim::cupcap(3, k, k)));
}
BENCHMARK(BM_VerifyX)->DenseRange(5, 8);

void BM_Dilworth(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> dx(-500, 1500), dy(1, 800);
  PointSet p;
  while (p.size() < static_cast<std::size_t>(state.range(0))) {
    Point q(dx(rng), dy(rng));
    if (std::find(p.begin(), p.end(), q) == p.end()) p.push_back(q);
  }
  ConvexBody b = ConvexBody::segment({0, 0}, {1000, 0});
  for (auto _ : state) benchmark::DoNotOptimize(dilworth(prec_order(p, b)));
}
BENCHMARK(BM_Dilworth)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
