#include "levywn/levy_triplet.hpp"

#include <cmath>

#include "levywn/errors.hpp"

namespace levywn {
namespace {

// ∫ x (1{|x| <= r} - 1{|x| <= 1}) ν(dx).
double shifted_truncation(const LevyMeasure& nu, double r, const QuadratureConfig& cfg) {
  if (r == 1.0) return 0.0;
  if (r > 1.0) return band_first_moment(nu, 1.0, r, cfg);
  return -band_first_moment(nu, r, 1.0, cfg);
}

}  // namespace

void validate(const LevyTriplet& t) {
  if (!std::isfinite(t.gamma)) throw InvalidArgument("drift must be finite");
  if (!(t.sigma2 >= 0.0) || !std::isfinite(t.sigma2))
    throw InvalidArgument("Gaussian variance must be finite and nonnegative");
  validate(t.nu);
}

bool is_symmetric(const LevyTriplet& t) { return t.gamma == 0.0 && is_symmetric(t.nu); }

ComplexValue levy_exponent(const LevyTriplet& t, double xi, const QuadratureConfig& cfg) {
  if (!std::isfinite(xi)) throw InvalidArgument("levy_exponent requires finite xi");
  if (xi == 0.0) return {0.0, 0.0};
  return ComplexValue(-0.5 * t.sigma2 * xi * xi, t.gamma * xi) + jump_exponent(t.nu, xi, cfg);
}

LevyTriplet symmetrize(const LevyTriplet& t) { return {0.0, t.sigma2, symmetrized(t.nu)}; }

LevyTriplet sum_independent(const LevyTriplet& a, const LevyTriplet& b, SumPolicy policy) {
  return {a.gamma + b.gamma, a.sigma2 + b.sigma2, add(a.nu, b.nu, policy)};
}

LevyTriplet rescale_amplitude(const LevyTriplet& t, double a, const QuadratureConfig& cfg) {
  if (a == 0.0 || !std::isfinite(a))
    throw InvalidArgument("rescale_amplitude requires a finite nonzero factor");
  const double shift = a * shifted_truncation(t.nu, 1.0 / std::abs(a), cfg);
  return {a * t.gamma + shift, a * a * t.sigma2, pushforward(t.nu, a)};
}

double asymmetry_functional(const LevyTriplet& t, double xi, const QuadratureConfig& cfg) {
  if (xi == 0.0) return 0.0;
  if (is_symmetric(t.nu)) return std::abs(t.gamma * xi);
  return std::abs(t.gamma * xi + xi * shifted_truncation(t.nu, 1.0 / std::abs(xi), cfg));
}

}  // namespace levywn
