#include <benchmark/benchmark.h>

#include "stratwave/specfun.hpp"

using namespace stratwave;

static void WhittakerWConnection(benchmark::State& state) {
  const Complex g(0.3);
  double z = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::whittaker_w(g, Complex(z)));
    z = (z < 5.0) ? z + 0.1 : 0.5;
  }
}
BENCHMARK(WhittakerWConnection);

static void WhittakerWLaplace(benchmark::State& state) {
  const Complex g(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(specfun::whittaker_w(g, Complex(20.0)));
}
BENCHMARK(WhittakerWLaplace);

static void WhittakerWAsymptotic(benchmark::State& state) {
  const Complex g(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(specfun::whittaker_w(g, Complex(55.0)));
}
BENCHMARK(WhittakerWAsymptotic);

BENCHMARK_MAIN();
