// Serial direct summation against the FFT path, per transform kind.

#include <benchmark/benchmark.h>

#include <random>

#include "reexp/hilbert.hpp"

namespace {

using namespace reexp;

Coeff1D random_sequence(Index n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = u(rng);
  return Coeff1D(1, std::move(v));
}

template <HilbertKind Kind, Algorithm Alg>
void BM_dht(benchmark::State& state) {
  const Index n = state.range(0);
  const Coeff1D a = random_sequence(n);
  const TransformRequest req{Kind, {1, n}, Alg};
  for (auto _ : state) benchmark::DoNotOptimize(dht(a, req));
  state.SetComplexityN(n);
}

#define REEXP_BENCH_KIND(kind)                                                              \
  BENCHMARK(BM_dht<HilbertKind::kind, Algorithm::naive>)->RangeMultiplier(2)->Range(256, 8192) \
      ->Complexity(benchmark::oNSquared);                                                   \
  BENCHMARK(BM_dht<HilbertKind::kind, Algorithm::fast>)->RangeMultiplier(2)->Range(256, 1 << 16) \
      ->Complexity(benchmark::oNLogN);

REEXP_BENCH_KIND(full)
REEXP_BENCH_KIND(even)
REEXP_BENCH_KIND(odd)
REEXP_BENCH_KIND(even_halved)
REEXP_BENCH_KIND(odd_halved)

}  // namespace

BENCHMARK_MAIN();
