#include <cmath>

#include <benchmark/benchmark.h>

#include "scatcm/dda.hpp"
#include "scatcm/mie.hpp"
#include "scatcm/modes.hpp"
#include "scatcm/quadrature.hpp"
#include "scatcm/swe.hpp"
#include "scatcm/tracking.hpp"

using namespace scatcm;

namespace {

const LayeredSphere kSphere = LayeredSphere::homogeneous(1.0, 3.0);

// Rule size as the argument; single thread so numbers compare across hosts.
void BM_VshMatrix(benchmark::State& state) {
  const QuadratureRule rule = lebedev_rule(static_cast<std::size_t>(state.range(0)));
  const int l_max = rule.degree() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(vsh_matrix(l_max, rule));
}
BENCHMARK(BM_VshMatrix)->Arg(26)->Arg(110)->Arg(302)->Unit(benchmark::kMillisecond);

void BM_MieAssemble(benchmark::State& state) {
  const QuadratureRule rule = lebedev_rule(static_cast<std::size_t>(state.range(0)));
  const MieBackend mie(kSphere);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(mie, rule, 2.0, 1));
}
BENCHMARK(BM_MieAssemble)->Arg(26)->Arg(110)->Arg(302)->Unit(benchmark::kMillisecond);

// Lattice edge n: n x n x 1 dipoles at ka = 0.5.
void BM_DdaAssemble(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const double k = 0.5 / (0.5 * std::sqrt(2.0 * n * n + 1.0));
  const DdaBackend dda({{n, n, 1}, 1.0, 3.0});
  const QuadratureRule rule = lebedev_rule(50);
  for (auto _ : state) benchmark::DoNotOptimize(assemble(dda, rule, k, 1));
}
BENCHMARK(BM_DdaAssemble)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const QuadratureRule rule = lebedev_rule(static_cast<std::size_t>(state.range(0)));
  const ScatteringMatrix s = apply_weights(assemble(MieBackend(kSphere), rule, 2.0, 1));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(s));
}
BENCHMARK(BM_Decompose)->Arg(26)->Arg(110)->Arg(194)->Unit(benchmark::kMillisecond);

void BM_Track(benchmark::State& state) {
  SweepResult sweep;
  const QuadratureRule rule = lebedev_rule(50);
  for (int i = 0; i < state.range(0); ++i) {
    const double ka = 0.5 + 0.02 * i;
    sweep.frequencies.push_back(ka);
    sweep.modesets.push_back(decompose(apply_weights(assemble(MieBackend(kSphere), rule, ka, 1))));
  }
  for (auto _ : state) benchmark::DoNotOptimize(track(sweep));
}
BENCHMARK(BM_Track)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
