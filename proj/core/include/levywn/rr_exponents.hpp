#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "levywn/extended.hpp"
#include "levywn/levy_triplet.hpp"
#include "levywn/phi_function.hpp"
#include "levywn/quadrature.hpp"

namespace levywn {

enum class EvaluationRoute {
  ClosedForm,  // per-family closed forms where available
  Quadrature,  // direct quadrature of the Lévy measure density
};

// Ψ_p(ξ) = m_{γ,ν}(ξ) + σ²ξ² + ξ² ∫_{|x|<=1/|ξ|} x² ν + |ξ|^p ∫_{|x|>1/|ξ|} |x|^p ν,
// with 0 <= p <= 2 (p = 0 is the plain exponent Ψ).
class RREvaluator {
 public:
  explicit RREvaluator(LevyTriplet triplet, double p = 0.0, QuadratureConfig cfg = {},
                       EvaluationRoute route = EvaluationRoute::ClosedForm);

  // +inf for ξ != 0 when the large-jump p-moment diverges.
  double operator()(double xi) const;

  double asymmetry_part(double xi) const;
  double gaussian_part(double xi) const;
  double small_jump_part(double xi) const;
  Extended large_jump_part(double xi) const;

  // Asymptotics of ξ -> Ψ_p(ξ); sides are absent when they cannot be derived
  // from the measure metadata (asymmetric measures, missing tail data).
  GrowthProfile growth() const;

  const LevyTriplet& triplet() const { return triplet_; }
  double p() const { return p_; }
  const QuadratureConfig& quadrature() const { return cfg_; }
  EvaluationRoute route() const { return route_; }

 private:
  struct Numeric;

  LevyTriplet triplet_;
  double p_;
  QuadratureConfig cfg_;
  EvaluationRoute route_;
  bool symmetric_nu_;
  std::shared_ptr<const Numeric> numeric_;
};

double psi_rr(const RREvaluator& ev, double xi);

struct SandwichBounds {
  double lower;
  double upper;
};

// m_{p,2}(ν) ρ_{p,2}(ξ) and m_{p,2}(ν) ρ_{2,p}(ξ). Requires a symmetric triplet
// without Gaussian part and m_{p,2}(ν) < inf.
SandwichBounds sandwich_bounds(const RREvaluator& ev, double xi);

// Least C with Ψ_p <= C ρ on the grid; absent when ρ vanishes where Ψ_p does
// not or Ψ_p is infinite.
std::optional<double> psi_rr_dominated_by(const RREvaluator& ev, const PhiFunction& rho,
                                          const std::vector<double>& grid);

PhiFunction as_phi_function(const RREvaluator& ev);

}  // namespace levywn
