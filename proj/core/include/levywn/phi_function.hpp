#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace levywn {

// ρ(ξ) ~ |ξ|^exponent, times log|ξ| when logarithmic.
struct Asymptote {
  double exponent = 0.0;
  bool logarithmic = false;
};

// Power-counting data of a φ-function at ξ -> 0 and |ξ| -> inf. An absent side
// means the behaviour is not known analytically.
struct GrowthProfile {
  std::optional<Asymptote> at_zero;
  std::optional<Asymptote> at_infinity;
  // ρ(ξ) = +inf for every ξ != 0.
  bool identically_infinite = false;
  // ρ ≡ 0.
  bool identically_zero = false;

  bool known() const { return identically_infinite || identically_zero || (at_zero && at_infinity); }
};

// Pointwise dominance: the larger of two asymptotes at ξ -> 0 (smaller
// exponent) and at inf (larger exponent).
Asymptote dominant_at_zero(const Asymptote& a, const Asymptote& b);
Asymptote dominant_at_infinity(const Asymptote& a, const Asymptote& b);
// Growth of a sum of two nonnegative functions.
GrowthProfile combine(const GrowthProfile& a, const GrowthProfile& b);

class PhiFunction {
 public:
  enum class Kind { RhoP0Pinf, RhoLogPinf, RajputRosinski, Custom };

  // |ξ|^p0 on |ξ| > 1, |ξ|^pinf on |ξ| <= 1; p0 >= 0, pinf > 0.
  static PhiFunction rho(double p0, double pinf);
  // 1 + log|ξ| on |ξ| > 1, |ξ|^pinf on |ξ| <= 1.
  static PhiFunction rho_log(double pinf);
  static PhiFunction rajput_rosinski(std::function<double(double)> f, GrowthProfile growth,
                                     std::string label);
  static PhiFunction custom(std::function<double(double)> f, GrowthProfile growth,
                            std::optional<double> delta2 = std::nullopt, std::string label = "custom");

  double operator()(double xi) const { return f_(xi); }

  Kind kind() const { return kind_; }
  // Exponents for RhoP0Pinf (p0 is unused for RhoLogPinf).
  double p0() const { return p0_; }
  double pinf() const { return pinf_; }
  const GrowthProfile& growth() const { return growth_; }
  // Analytic upper bound on sup ρ(2ξ)/ρ(ξ), when known.
  std::optional<double> delta2_bound() const { return delta2_; }
  const std::string& label() const { return label_; }

 private:
  PhiFunction() = default;

  std::function<double(double)> f_;
  Kind kind_ = Kind::Custom;
  double p0_ = 0.0;
  double pinf_ = 0.0;
  GrowthProfile growth_;
  std::optional<double> delta2_;
  std::string label_;
};

}  // namespace levywn
