#include <benchmark/benchmark.h>

#include "hcwalk/full_walk.hpp"
#include "hcwalk/specfun.hpp"
#include "hcwalk/spectral.hpp"
#include "hcwalk/walk.hpp"

using namespace hcwalk;

static void BM_Scan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan({n, 2 * n}));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Scan)->Arg(10)->Arg(50)->Arg(200)->Complexity();

static void BM_FullWalk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FullState s = full_start(n);
    for (int t = 0; t < 10; ++t) s = full_step(s);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_FullWalk)->Arg(8)->Arg(12);

static void BM_BesselJ(benchmark::State& state) {
  const int nu = static_cast<int>(state.range(0));
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::bessel_J(nu, x));
    x = x < 900.0 ? x * 1.37 : 0.5;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(20)->Arg(200);

static void BM_ChebyshevSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral::p0_amplitude_chebyshev(n, n - (n % 2)));
}
BENCHMARK(BM_ChebyshevSum)->Arg(50)->Arg(500);

static void BM_SegmentIntegral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int nu = n - 2;
  for (auto _ : state) benchmark::DoNotOptimize(spectral::segment_integral(n, nu, n));
}
BENCHMARK(BM_SegmentIntegral)->Arg(20)->Arg(40);

static void BM_BesselAmplitude(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spectral::p0_amplitude_bessel(30, 20));
}
BENCHMARK(BM_BesselAmplitude);

static void BM_ChebyshevViaBessel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::chebyshev_via_bessel(20, 0.3));
}
BENCHMARK(BM_ChebyshevViaBessel);

BENCHMARK_MAIN();
