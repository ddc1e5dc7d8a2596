#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pbcell/cell_enumeration.hpp"
#include "pbcell/lattice.hpp"
#include "pbcell/periodic_distance.hpp"
#include "pbcell/reduction.hpp"
#include "pbcell/voronoi.hpp"

using namespace pbcell;

namespace {

Basis skewed(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = normal(gen);
  IMat u = IMat::Identity(n, n);
  u(0, n - 1) = 7;
  u(1, 0) = -4;
  return validate_basis(m).transformed(u);
}

std::vector<FracPoint> points(int n, int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<FracPoint> out;
  for (int k = 0; k < count; ++k) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = u(gen);
    out.push_back({v});
  }
  return out;
}

void BM_Reduce(benchmark::State& state) {
  const Basis b = skewed(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(b));
}
BENCHMARK(BM_Reduce)->Arg(2)->Arg(3);

void BM_VoronoiCell(benchmark::State& state) {
  const Basis b = skewed(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(voronoi_cell(b));
}
BENCHMARK(BM_VoronoiCell)->Arg(2)->Arg(3);

void BM_EnumerateCells(benchmark::State& state) {
  const Basis b = cell_params_to_basis({1, 1.1, 1.2, 100, 95, 98});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ps(b));
}
BENCHMARK(BM_EnumerateCells);

void BM_MinImageDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PeriodicMetric metric(skewed(n, 3));
  const auto pts = points(n, 256, 4);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric.distance(pts[k % 256], pts[(k * 7 + 1) % 256]));
    ++k;
  }
}
BENCHMARK(BM_MinImageDistance)->Arg(2)->Arg(3);

void BM_PairwiseDistances(benchmark::State& state) {
  const int count = static_cast<int>(state.range(0));
  const PeriodicPointSet ps = PeriodicPointSet::make(skewed(3, 5), points(3, count, 6));
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_distances(ps));
  state.SetComplexityN(count);
}
BENCHMARK(BM_PairwiseDistances)->Arg(16)->Arg(64)->Arg(256)->Complexity(benchmark::oNSquared);

}  // namespace
BENCHMARK_MAIN();
