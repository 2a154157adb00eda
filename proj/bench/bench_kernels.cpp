#include <benchmark/benchmark.h>

#include "hgsat/gamma_table.hpp"
#include "hgsat/sweep_kernels.hpp"

using namespace hgsat;

namespace {

void BM_GammaTableSerial(benchmark::State& state) {
  const auto ctx = make_prime_ctx(static_cast<std::uint64_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma_table(ctx, 12, TableBuild::Serial));
}

void BM_GammaTableParallel(benchmark::State& state) {
  const auto ctx = make_prime_ctx(static_cast<std::uint64_t>(state.range(0)), 2);
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma_table(ctx, 12, TableBuild::Parallel, threads));
}

struct Prepared {
  PrimeCtx ctx;
  GammaTable table;
  FamilyEvaluator ev;
  explicit Prepared(std::uint64_t p) : ctx(make_prime_ctx(p, 2)), table(build_gamma_table(ctx)), ev(ctx, table) {}
};

void BM_SweepSerial(benchmark::State& state) {
  const Prepared e(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::family_sweep_serial(e.ev, Family::G2));
}

void BM_SweepParallel(benchmark::State& state) {
  const Prepared e(static_cast<std::uint64_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::family_sweep_omp(e.ev, Family::G2, threads));
}

}  // namespace

// 1009 and 10009 are both 1 mod 3, so the 2G2 sweep applies.
BENCHMARK(BM_GammaTableSerial)->Arg(1009)->Arg(10009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GammaTableParallel)->ArgsProduct({{1009, 10009}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(1009)->Arg(10009)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->ArgsProduct({{1009, 10009}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
