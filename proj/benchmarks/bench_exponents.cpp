#include <benchmark/benchmark.h>

#include <cmath>

#include "levywn/levy_triplet.hpp"
#include "levywn/quadrature.hpp"
#include "levywn/rr_exponents.hpp"

namespace levywn {
namespace {

LevyTriplet stable(double alpha) { return {0.0, 0.0, StableTail{alpha, 1.0}}; }

void BM_Integrate_Gaussian(benchmark::State& state) {
  const Integrand f = [](double x) { return std::exp(-0.5 * x * x); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate(f, -8.0, 8.0).value);
}

void BM_IntegrateLog_PowerSingularity(benchmark::State& state) {
  const Integrand f = [](double x) { return std::pow(x, -0.5); };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_log(f, 1e-12, 1.0).value);
}

// range(0): route (0 closed form, 1 quadrature); range(1): 10·p.
void BM_PsiP_Stable(benchmark::State& state) {
  const auto route = state.range(0) == 0 ? EvaluationRoute::ClosedForm : EvaluationRoute::Quadrature;
  const RREvaluator ev(stable(1.5), static_cast<double>(state.range(1)) / 10.0, {}, route);
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev(xi));
    xi = xi < 100.0 ? xi * 1.37 : 0.1;
  }
}

void BM_PsiP_Laplace(benchmark::State& state) {
  const auto route = state.range(0) == 0 ? EvaluationRoute::ClosedForm : EvaluationRoute::Quadrature;
  const RREvaluator ev({0.0, 0.0, GeneralizedLaplace{1.0, 2.0}}, 1.0, {}, route);
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ev(xi));
    xi = xi < 100.0 ? xi * 1.37 : 0.1;
  }
}

void BM_SandwichBounds(benchmark::State& state) {
  const RREvaluator ev({0.0, 0.0, CompoundPoisson{2.0, GaussianJumps{0.0, 1.0}}}, 0.5);
  double xi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sandwich_bounds(ev, xi));
    xi = xi < 100.0 ? xi * 1.37 : 0.1;
  }
}

}  // namespace
}  // namespace levywn

BENCHMARK(levywn::BM_Integrate_Gaussian);
BENCHMARK(levywn::BM_IntegrateLog_PowerSingularity);
BENCHMARK(levywn::BM_PsiP_Stable)->ArgsProduct({{0, 1}, {0, 10, 20}});
BENCHMARK(levywn::BM_PsiP_Laplace)->Arg(0)->Arg(1);
BENCHMARK(levywn::BM_SandwichBounds);
