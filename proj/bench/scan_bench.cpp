// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "schubert/schubert.hpp"
#include "schubert/verify.hpp"

using namespace schubert;

static void BM_ScanSerial(benchmark::State& state, const char* check) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_serial(n, check));
}

static void BM_ScanParallel(benchmark::State& state, const char* check) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(n, check));
}

BENCHMARK_CAPTURE(BM_ScanSerial, bpd_formula, "bpd-formula")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ScanParallel, bpd_formula, "bpd-formula")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ScanSerial, conjecture1, "conjecture1")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ScanParallel, conjecture1, "conjecture1")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BpdSumSerial(benchmark::State& state) {
  const auto w = Permutation::parse("165432");
  for (auto _ : state) benchmark::DoNotOptimize(schubert_bpd(w));
}

static void BM_BpdSumParallel(benchmark::State& state) {
  const auto w = Permutation::parse("165432");
  for (auto _ : state) benchmark::DoNotOptimize(schubert_bpd_parallel(w));
}

BENCHMARK(BM_BpdSumSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BpdSumParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
