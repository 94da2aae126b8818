#include "levywn/phi_function.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "format.hpp"
#include "levywn/errors.hpp"

namespace levywn {

using detail::format_number;

Asymptote dominant_at_zero(const Asymptote& a, const Asymptote& b) {
  if (a.exponent != b.exponent) return a.exponent < b.exponent ? a : b;
  return {a.exponent, a.logarithmic || b.logarithmic};
}

Asymptote dominant_at_infinity(const Asymptote& a, const Asymptote& b) {
  if (a.exponent != b.exponent) return a.exponent > b.exponent ? a : b;
  return {a.exponent, a.logarithmic || b.logarithmic};
}

GrowthProfile combine(const GrowthProfile& a, const GrowthProfile& b) {
  if (a.identically_infinite || b.identically_infinite) {
    GrowthProfile g;
    g.identically_infinite = true;
    return g;
  }
  if (a.identically_zero) return b;
  if (b.identically_zero) return a;
  GrowthProfile g;
  if (a.at_zero && b.at_zero) g.at_zero = dominant_at_zero(*a.at_zero, *b.at_zero);
  if (a.at_infinity && b.at_infinity) g.at_infinity = dominant_at_infinity(*a.at_infinity, *b.at_infinity);
  return g;
}

PhiFunction PhiFunction::rho(double p0, double pinf) {
  if (!(p0 >= 0.0) || !(pinf > 0.0) || !std::isfinite(p0) || !std::isfinite(pinf))
    throw InvalidArgument("rho_{p0,pinf} needs p0 >= 0 and pinf > 0");
  PhiFunction r;
  r.kind_ = Kind::RhoP0Pinf;
  r.p0_ = p0;
  r.pinf_ = pinf;
  r.f_ = [p0, pinf](double xi) {
    const double m = std::abs(xi);
    if (m > 1.0) return p0 == 0.0 ? 1.0 : std::pow(m, p0);
    return std::pow(m, pinf);
  };
  r.growth_.at_zero = Asymptote{pinf, false};
  r.growth_.at_infinity = Asymptote{p0, false};
  r.delta2_ = std::max(std::exp2(p0), std::exp2(pinf));
  r.label_ = "rho_{" + format_number(p0) + "," + format_number(pinf) + "}";
  return r;
}

PhiFunction PhiFunction::rho_log(double pinf) {
  if (!(pinf > 0.0) || !std::isfinite(pinf)) throw InvalidArgument("rho_{log,pinf} needs pinf > 0");
  PhiFunction r;
  r.kind_ = Kind::RhoLogPinf;
  r.pinf_ = pinf;
  r.f_ = [pinf](double xi) {
    const double m = std::abs(xi);
    if (m > 1.0) return 1.0 + std::log(m);
    return std::pow(m, pinf);
  };
  r.growth_.at_zero = Asymptote{pinf, false};
  r.growth_.at_infinity = Asymptote{0.0, true};
  r.delta2_ = std::max(std::exp2(pinf), 1.0 + std::numbers::ln2);
  r.label_ = "rho_{log," + format_number(pinf) + "}";
  return r;
}

PhiFunction PhiFunction::rajput_rosinski(std::function<double(double)> f, GrowthProfile growth,
                                         std::string label) {
  PhiFunction r;
  r.kind_ = Kind::RajputRosinski;
  r.f_ = std::move(f);
  r.growth_ = growth;
  r.label_ = std::move(label);
  return r;
}

PhiFunction PhiFunction::custom(std::function<double(double)> f, GrowthProfile growth,
                                std::optional<double> delta2, std::string label) {
  if (!f) throw InvalidArgument("custom phi-function needs an evaluator");
  PhiFunction r;
  r.kind_ = Kind::Custom;
  r.f_ = std::move(f);
  r.growth_ = growth;
  r.delta2_ = delta2;
  r.label_ = std::move(label);
  return r;
}

}  // namespace levywn
