#include <benchmark/benchmark.h>

#include <random>

#include "ksector/oracle.hpp"

using namespace ksector;

namespace {

IntervalPolynomial complex_cubic() {
  std::vector<ComplexIntervalBox> boxes{
      {{2.9475, 3.1475}, {-0.43, -0.23}},
      {{6.455, 6.655}, {-0.425, -0.225}},
      {{4.4, 4.6}, {-0.15, 0.05}},
      {{0.9, 1.1}, {-0.1, 0.1}},
  };
  return IntervalPolynomial(std::move(boxes), false);
}

PointPolynomial random_poly(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-4.0, -0.2);
  std::uniform_real_distribution<double> imag(-4.0, 4.0);
  std::vector<Complex> roots;
  for (int k = 0; k < degree; ++k) roots.emplace_back(coord(rng), imag(rng));
  return poly_from_roots(roots, {1.0, 0.0});
}

void BM_Roots(benchmark::State& state) {
  const PointPolynomial p =
      random_poly(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots(p));
  }
}
BENCHMARK(BM_Roots)->DenseRange(2, 8, 2);

void BM_Certify(benchmark::State& state) {
  const IntervalPolynomial family = complex_cubic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(family));
  }
}
BENCHMARK(BM_Certify);

void BM_BisectLeft(benchmark::State& state) {
  const IntervalPolynomial family = complex_cubic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(bisect(family, Side::Left, {}));
  }
}
BENCHMARK(BM_BisectLeft);

void BM_SampleSector(benchmark::State& state) {
  const IntervalPolynomial family = complex_cubic();
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_sector(family, count, 0, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(count));
}
BENCHMARK(BM_SampleSector)->Arg(1000)->Arg(10000);

void BM_VertexSector(benchmark::State& state) {
  const IntervalPolynomial family = complex_cubic();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vertex_sector(family));
  }
}
BENCHMARK(BM_VertexSector);

}  // namespace

BENCHMARK_MAIN();
