#include <benchmark/benchmark.h>

#include "levywn/levy_triplet.hpp"
#include "levywn/processes.hpp"
#include "levywn/rng.hpp"
#include "levywn/sampler.hpp"
#include "levywn/test_function.hpp"

namespace levywn {
namespace {

const TestFunction kUnit = Indicator{Box{{0.0}, {1.0}}};

void BM_Draw_Laplace(benchmark::State& state) {
  const LevyTriplet t{0.0, 0.0, GeneralizedLaplace{1.0, 2.0}};
  const PairingSampler sampler(t, make_target(t, kUnit), 1);
  RngStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}

void BM_Draw_CompoundPoissonOU(benchmark::State& state) {
  const LevyTriplet t{0.0, 0.0, CompoundPoisson{5.0, GaussianJumps{0.0, 1.0}}};
  const PairingSampler sampler(t, make_target(t, OUKernel{1.0}), 1);
  RngStream rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}

void BM_StandardSaS(benchmark::State& state) {
  RngStream rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(standard_sas(1.5, rng));
}

// range(0): batch size.
void BM_SamplePairing_Stable(benchmark::State& state) {
  const LevyTriplet t{0.0, 0.0, StableTail{1.5, 1.0}};
  SamplerConfig cfg;
  cfg.threads = 1;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_pairing(t, kUnit, n, RngStream(4, 0), cfg).values.data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OUPath_Laplace(benchmark::State& state) {
  const LevyTriplet t{0.0, 0.0, GeneralizedLaplace{1.0, 2.0}};
  const auto grid = linear_grid(0.0, 10.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_ou(t, 1.0, grid, RngStream(5, 0)).values.data());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace
}  // namespace levywn

BENCHMARK(levywn::BM_Draw_Laplace);
BENCHMARK(levywn::BM_Draw_CompoundPoissonOU);
BENCHMARK(levywn::BM_StandardSaS);
BENCHMARK(levywn::BM_SamplePairing_Stable)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(levywn::BM_OUPath_Laplace)->Arg(101)->Arg(1001)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
