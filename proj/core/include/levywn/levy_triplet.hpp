#pragma once

#include <complex>

#include "levywn/levy_measure.hpp"
#include "levywn/quadrature.hpp"

namespace levywn {

using ComplexValue = std::complex<double>;

struct LevyTriplet {
  double gamma = 0.0;
  double sigma2 = 0.0;
  LevyMeasure nu;
};

void validate(const LevyTriplet& t);

// γ = 0 and ν symmetric, so that ψ is real and even.
bool is_symmetric(const LevyTriplet& t);

// ψ(ξ) = iγξ - σ²ξ²/2 + ∫(e^{ixξ} - 1 - ixξ 1{|x|<=1}) ν(dx).
ComplexValue levy_exponent(const LevyTriplet& t, double xi, const QuadratureConfig& cfg = {});

// (0, σ², ν_sym).
LevyTriplet symmetrize(const LevyTriplet& t);

LevyTriplet sum_independent(const LevyTriplet& a, const LevyTriplet& b,
                            SumPolicy policy = SumPolicy::AllowWrapper);

// Triplet of the noise a·Ẋ: ψ_a(ξ) = ψ(aξ).
LevyTriplet rescale_amplitude(const LevyTriplet& t, double a, const QuadratureConfig& cfg = {});

// m_{γ,ν}(ξ) = |γξ + ∫ xξ (1{|xξ|<=1} - 1{|x|<=1}) ν(dx)|.
double asymmetry_functional(const LevyTriplet& t, double xi, const QuadratureConfig& cfg = {});

}  // namespace levywn
