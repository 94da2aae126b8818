#pragma once

#include <functional>
#include <vector>

namespace levywn {

struct QuadratureConfig {
  double rel_tol = 1e-11;
  double abs_tol = 1e-300;
  unsigned max_depth = 18;
  // Maximum number of half-periods summed by the oscillatory integrator.
  unsigned max_half_periods = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod on [a, b]; a and b may be infinite.
// Throws QuadratureDivergence when the error estimate exceeds the tolerance.
QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg = {});

// Sum of integrals over consecutive points; points must be sorted.
QuadratureResult integrate_pieces(const Integrand& f, const std::vector<double>& points,
                                  const QuadratureConfig& cfg = {});

// ∫_lo^hi f(x) dx for 0 < lo < hi, integrated in s = log x. Breakpoints
// outside (lo, hi) are ignored.
QuadratureResult integrate_log(const Integrand& f, double lo, double hi,
                               const QuadratureConfig& cfg = {},
                               const std::vector<double>& breaks = {});

// ∫_0^hi f(x) dx where f(x) ~ C x^k as x -> 0 with k > -1. The piece below
// hi * depth is replaced by the power-law remainder.
double integrate_from_origin(const Integrand& f, double hi, double k,
                             const QuadratureConfig& cfg = {},
                             const std::vector<double>& breaks = {}, double depth = 1e-12);

// ∫_lo^inf f(x) dx where f(x) ~ C x^k as x -> inf with k < -1. The piece
// above lo * reach is replaced by the power-law remainder.
double integrate_to_infinity(const Integrand& f, double lo, double k,
                             const QuadratureConfig& cfg = {},
                             const std::vector<double>& breaks = {}, double reach = 1e12);

enum class Trig { Cos, Sin };

// ∫_a^end w(x) trig(omega x) dx with omega > 0, summed one half-period at a
// time. `end` may be infinite, in which case w must decay; the alternating
// tail is accelerated by repeated averaging of partial sums.
double integrate_oscillatory(const Integrand& w, double a, double end, double omega, Trig trig,
                             const QuadratureConfig& cfg = {});

}  // namespace levywn
