#include <benchmark/benchmark.h>

#include <numbers>

#include "koiter/ansatz.hpp"
#include "koiter/critical_load.hpp"
#include "koiter/korn.hpp"
#include "koiter/modes.hpp"
#include "koiter/oracle.hpp"

namespace {

using namespace koiter;

constexpr double kPi = std::numbers::pi;
const IsotropicElasticity kSteel = IsotropicElasticity::from_poisson(0.3);

/// Full integer sweep; the argument is 1/h.
void BM_Sweep(benchmark::State& state) {
  const CriticalLoadProblem problem(ShellGeometry(1.0 / static_cast<double>(state.range(0)), kPi), kSteel);
  for (auto _ : state) benchmark::DoNotOptimize(sweep(problem, 1));
  state.counters["modes"] = static_cast<double>(problem.window().max_m) * (problem.window().max_n + 1);
}
BENCHMARK(BM_Sweep)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

/// One closed-form reduced load.
void BM_Lambda3Tilde(benchmark::State& state) {
  const CriticalLoadProblem problem(ShellGeometry(0.01, kPi), kSteel);
  const auto wn = problem.wave_numbers(3, 13);
  for (auto _ : state) benchmark::DoNotOptimize(lambda3_tilde(problem, wn));
}
BENCHMARK(BM_Lambda3Tilde);

/// Pencil assembly for one mode; the argument is the radial degree.
void BM_AssemblePencil(benchmark::State& state) {
  const ShellGeometry geom(0.01, kPi);
  const RadialDiscretization disc{static_cast<int>(state.range(0)), 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_pencil(geom, kSteel, WaveNumbers(3, 13, kPi), DenominatorKind::RadialShear, disc));
  }
}
BENCHMARK(BM_AssemblePencil)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

/// Generalized eigen-solve of an assembled pencil.
void BM_MinRayleigh(benchmark::State& state) {
  const ShellGeometry geom(0.01, kPi);
  const RadialDiscretization disc{static_cast<int>(state.range(0)), 0};
  const auto pencil = assemble_pencil(geom, kSteel, WaveNumbers(3, 13, kPi), DenominatorKind::RadialShear, disc);
  for (auto _ : state) benchmark::DoNotOptimize(min_rayleigh(pencil));
}
BENCHMARK(BM_MinRayleigh)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

/// Extremal Korn ratios of one mode.
void BM_KornRatios(benchmark::State& state) {
  const ShellGeometry geom(0.01, kPi);
  for (auto _ : state) benchmark::DoNotOptimize(korn_ratios(geom, WaveNumbers(2, 9, kPi), {}));
}
BENCHMARK(BM_KornRatios)->Unit(benchmark::kMicrosecond);

/// Ansatz field quadrature at the default resolution.
void BM_AnsatzRatios(benchmark::State& state) {
  const ShellGeometry geom(1e-4, kPi);
  for (auto _ : state) benchmark::DoNotOptimize(ansatz_ratios(geom));
}
BENCHMARK(BM_AnsatzRatios)->Unit(benchmark::kMillisecond);

/// Two-term mode sampling on the default grid.
void BM_SynthesizeMode(benchmark::State& state) {
  const BucklingMode mode({ShellGeometry(0.01, kPi), kSteel, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(mode, {}, 1));
}
BENCHMARK(BM_SynthesizeMode)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
