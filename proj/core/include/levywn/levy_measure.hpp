#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "levywn/extended.hpp"
#include "levywn/jump_distribution.hpp"
#include "levywn/quadrature.hpp"

namespace levywn {

class LevyMeasure;

struct ZeroMeasure {};

struct FiniteDiscrete {
  struct Atom {
    double location;
    double mass;
  };
  std::vector<Atom> atoms;
};

// Symmetric density c |x|^{-1-alpha}.
struct StableTail {
  double alpha = 1.0;
  double c = 1.0;
};

// tau e^{-k|x|}/|x| with k = sqrt(2/sigma2), the Lévy measure of the law with
// characteristic function (1 + sigma2 xi^2/2)^{-tau}.
struct GeneralizedLaplace {
  double tau = 1.0;
  double sigma2 = 2.0;
  double rate() const;
};

struct CompoundPoisson {
  double lambda = 1.0;
  JumpDistribution jumps = TwoPoint{};
};

struct PowerLawTail {
  double exponent;  // density ~ |x|^{-1-exponent} as |x| -> inf
};
struct ExponentialTail {
  double rate;  // density <= C e^{-rate |x|} for large |x|
};
struct CompactSupport {
  double radius;  // density vanishes for |x| > radius
};
using TailClass = std::variant<PowerLawTail, ExponentialTail, CompactSupport>;

// Two-sided density on x != 0. Near the origin the density behaves like
// |x|^{-1-origin_exponent}; origin_exponent = -1 means bounded.
struct GenericDensity {
  std::function<double(double)> density;
  double origin_exponent = -1.0;
  std::optional<TailClass> tail;
  bool symmetric = false;
  // |x| values where the density is not smooth.
  std::vector<double> breakpoints;
};

struct MeasureSum {
  std::vector<LevyMeasure> terms;
};

class LevyMeasure {
 public:
  using Variant = std::variant<ZeroMeasure, FiniteDiscrete, StableTail, GeneralizedLaplace,
                               CompoundPoisson, GenericDensity, MeasureSum>;

  LevyMeasure() : v_(ZeroMeasure{}) {}
  template <class T, class = std::enable_if_t<std::is_constructible_v<Variant, T&&> &&
                                              !std::is_same_v<std::decay_t<T>, LevyMeasure>>>
  LevyMeasure(T&& alt) : v_(std::forward<T>(alt)) {}  // NOLINT implicit by design

  const Variant& variant() const { return v_; }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }
  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(v_);
  }
  std::string kind_name() const;

 private:
  Variant v_;
};

// Throws InvalidArgument when the invariants of the variant are violated.
void validate(const LevyMeasure& nu);

bool is_symmetric(const LevyMeasure& nu);
bool is_zero(const LevyMeasure& nu);
// ν(R) < inf.
bool has_finite_mass(const LevyMeasure& nu);

// ν(|x| > r) for r > 0 (finite for every Lévy measure); r = 0 is allowed for
// finite measures.
double mass_beyond(const LevyMeasure& nu, double r, const QuadratureConfig& cfg = {});

// ∫_{|x| <= r} |x|^q ν(dx).
Extended small_moment(const LevyMeasure& nu, double q, double r, const QuadratureConfig& cfg = {});
// ∫_{|x| > r} |x|^p ν(dx), r > 0.
Extended large_moment(const LevyMeasure& nu, double p, double r, const QuadratureConfig& cfg = {});
// ∫_{lo < |x| <= hi} x ν(dx), 0 < lo <= hi < inf.
double band_first_moment(const LevyMeasure& nu, double lo, double hi,
                         const QuadratureConfig& cfg = {});

// ∫ (e^{ixξ} - 1 - ixξ 1{|x| <= 1}) ν(dx).
std::complex<double> jump_exponent(const LevyMeasure& nu, double xi,
                                   const QuadratureConfig& cfg = {});

// m_{p,q}(ν) = ∫_{|x|>1} |x|^p ν + ∫_{|x|<=1} |x|^q ν.
Extended generalized_moment(const LevyMeasure& nu, double p, double q,
                            const QuadratureConfig& cfg = {});

double pruitt_index(const LevyMeasure& nu);
double blumenthal_getoor_index(const LevyMeasure& nu);

// Image of ν under x -> a x.
LevyMeasure pushforward(const LevyMeasure& nu, double a);
// (ν + ν(-.))/2.
LevyMeasure symmetrized(const LevyMeasure& nu);

enum class SumPolicy { AllowWrapper, ClosedOnly };
// ν1 + ν2, merged within a family when possible.
LevyMeasure add(const LevyMeasure& a, const LevyMeasure& b, SumPolicy policy = SumPolicy::AllowWrapper);

// Pure-power constant K with ∫(cos(xξ) - 1) |x|^{-1-α} dx = -2 K |ξ|^α.
double stable_constant(double alpha);

}  // namespace levywn
