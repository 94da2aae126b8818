#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "levywn/extended.hpp"
#include "levywn/levy_measure.hpp"
#include "levywn/quadrature.hpp"

namespace levywn::detail {

// A Lévy measure flattened to atoms plus one two-sided density, with the
// metadata the quadrature routes need to certify convergence.
struct DensityView {
  std::vector<FiniteDiscrete::Atom> atoms;
  std::function<double(double)> density;  // empty when there is no density part
  double origin_exponent = -1.0;
  std::optional<TailClass> tail = CompactSupport{0.0};
  std::vector<double> breakpoints;
  bool symmetric = true;

  bool has_density() const { return static_cast<bool>(density); }
  // ν(x) + ν(-x) and ν(x) - ν(-x) for x > 0.
  double even(double x) const { return density(x) + density(-x); }
  double odd(double x) const { return density(x) - density(-x); }
};

DensityView density_view(const LevyMeasure& nu);

Extended numeric_small_moment(const DensityView& v, double q, double r, const QuadratureConfig& cfg);
Extended numeric_large_moment(const DensityView& v, double p, double r, const QuadratureConfig& cfg);
double numeric_band_first_moment(const DensityView& v, double lo, double hi,
                                 const QuadratureConfig& cfg);
std::complex<double> numeric_jump_exponent(const DensityView& v, double xi,
                                           const QuadratureConfig& cfg);

}  // namespace levywn::detail
