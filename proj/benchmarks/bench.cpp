#include <benchmark/benchmark.h>

#include "ampkit/pade.hpp"
#include "ampkit/scheme.hpp"

using namespace ampkit;
using series::PowerSeries;

namespace {

PowerSeries sample_series(std::size_t order) {
  PowerSeries f(order);
  f[0] = 1;
  for (std::size_t i = 1; i <= order; ++i)
    f[i] = Real(i % 2 ? -1 : 1) / static_cast<int>(i * i + 1);
  return f;
}

void bm_series_mul(benchmark::State& state) {
  PrecisionGuard guard(60);
  auto f = sample_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series::mul(f, f));
}
BENCHMARK(bm_series_mul)->Arg(16)->Arg(64)->Arg(200);

void bm_pade_fit(benchmark::State& state) {
  PrecisionGuard guard(60);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  auto f = sample_series(2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(pade::fit(f, n, n));
}
BENCHMARK(bm_pade_fit)->Arg(4)->Arg(10)->Arg(25);

void bm_root_build(benchmark::State& state) {
  PrecisionGuard guard(60);
  std::size_t k = static_cast<std::size_t>(state.range(0));
  auto f = sample_series(k);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        selfsim::build_iterated_root(f, Real(1), Real(0), Real(-1), k));
}
BENCHMARK(bm_root_build)->Arg(2)->Arg(5)->Arg(10);

void bm_full_pipeline(benchmark::State& state) {
  auto p = corpus::get("debye_huckel");
  for (auto _ : state)
    benchmark::DoNotOptimize(scheme::corrected_amplitudes(p, 8));
}
BENCHMARK(bm_full_pipeline);

}  // namespace

int main(int argc, char** argv) {
  set_working_digits(kDefaultDigits);
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
