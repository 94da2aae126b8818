#pragma once

#include <optional>
#include <vector>

#include "levywn/extended.hpp"
#include "levywn/phi_function.hpp"
#include "levywn/quadrature.hpp"
#include "levywn/test_function.hpp"

namespace levywn {

// ρ(f) = ∫ ρ(f(t)) dt. +inf carries the power-counting certificate.
Extended modular(const PhiFunction& rho, const TestFunction& f, const QuadratureConfig& cfg = {});

struct FNormConfig {
  double rel_tol = 1e-12;
  unsigned max_iterations = 200;
  QuadratureConfig quadrature{};
};

struct FNormResult {
  double value = 0.0;
  // ρ(f/λ) at the returned λ.
  double modular_at_value = 0.0;
  unsigned iterations = 0;
};

// ‖f‖_ρ = inf{λ > 0 : ρ(f/λ) <= λ}. Requires a Δ2-regular ρ.
// Throws NoFiniteModular when ρ(f/λ) is infinite.
FNormResult f_norm(const PhiFunction& rho, const TestFunction& f, const FNormConfig& cfg = {});

// log-spaced grid of `count` points on [10^lo_decade, 10^hi_decade], with the
// branch points 1/2 and 1 added.
std::vector<double> log_grid(double lo_decade, double hi_decade, std::size_t count);

// Grid estimate of sup ρ(2ξ)/ρ(ξ) over ξ > 0 with ρ(ξ) > 0. The positive
// part of the grid must span at least 6 decades.
double delta2_constant(const PhiFunction& rho, const std::vector<double>& grid);

struct EmbeddingEvidence {
  bool holds = false;
  // max ρ_big/ρ_small on the grid.
  double constant = 0.0;
  // ξ attaining the constant, or where the ratio is seen to grow without bound.
  double witness = 0.0;
};

// Numeric evidence for ρ_big <= C ρ_small, i.e. L^{ρ_small} ⊆ L^{ρ_big}.
// Decided from the growth profiles when both are known, otherwise from the
// trend of the ratio over the outermost decades of the grid.
EmbeddingEvidence embedding_holds(const PhiFunction& rho_small, const PhiFunction& rho_big,
                                  const std::vector<double>& grid);

// ∫ (|f|^{p0} 1_{|f|>1} + 1_{0<|f|<=1}) dt, the membership functional of
// L^{p0,0}; infinite when the support of f has infinite measure.
Extended lp0_zero_modular(double p0, const TestFunction& f, const QuadratureConfig& cfg = {});

}  // namespace levywn
