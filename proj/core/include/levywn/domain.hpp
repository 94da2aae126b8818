#pragma once

#include <optional>
#include <string>
#include <utility>

#include "levywn/extended.hpp"
#include "levywn/levy_triplet.hpp"
#include "levywn/phi_function.hpp"
#include "levywn/quadrature.hpp"
#include "levywn/test_function.hpp"

namespace levywn {

// L^{p0,pinf}(ℝ^d) with the named special cases; `log_large` replaces |ξ|^{p0}
// on |ξ| > 1 by 1 + log|ξ|. `All` is the space of every measurable function
// (the zero noise).
struct DomainDescriptor {
  enum class Kind { L2, L1, L1capL2, Lalpha, LlogPinf, Lp0Pinf, Trivial, All, Unknown };

  Kind kind = Kind::Unknown;
  double p0 = 0.0;
  double pinf = 0.0;
  bool log_large = false;

  // Canonical descriptor of L^{p0,pinf} (or L^{log,pinf}).
  static DomainDescriptor lp(double p0, double pinf, bool log_large = false);
  static DomainDescriptor trivial();
  static DomainDescriptor all();
  static DomainDescriptor unknown();

  std::string name() const;
  bool operator==(const DomainDescriptor& o) const = default;
};

// Canonical descriptor of the intersection of two spaces.
DomainDescriptor intersect(const DomainDescriptor& a, const DomainDescriptor& b);

// Domain of L^p(Ẋ) for triplets built from drift, Gaussian part and symmetric
// named jump families; Unknown otherwise. Requires 0 <= p <= 2.
DomainDescriptor classify_domain(const LevyTriplet& triplet, double p);

// Membership functional of the descriptor space (Inconclusive for Unknown).
Extended descriptor_modular(const DomainDescriptor& d, const TestFunction& f, const QuadratureConfig& cfg = {});

enum class MembershipStatus { Member, NotMember, Inconclusive };

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::Inconclusive;
  std::optional<double> modular_value;
  // "closed-form" or "numeric".
  std::string route;
  // Rule that fired, the quadrature evidence, or the divergence certificate.
  std::string reason;
};

std::string to_string(MembershipStatus s);

// Analytic membership for closed-form domains and shapes (power-law,
// indicator and OU kernel under any affine change); absent otherwise.
std::optional<MembershipVerdict> is_member_closed_form(const LevyTriplet& triplet, double p,
                                                       const TestFunction& f);

// ∫ Ψ_p(f(t)) dt with a divergence certificate from the growth of Ψ_p.
MembershipVerdict is_member_numeric(const LevyTriplet& triplet, double p, const TestFunction& f,
                                    const QuadratureConfig& cfg = {});

// Closed-form route when available, numeric otherwise. Never throws.
MembershipVerdict is_member(const LevyTriplet& triplet, double p, const TestFunction& f,
                            const QuadratureConfig& cfg = {});

// L^p(Ẋ) = [L² if σ² ≠ 0] ∩ L^p(0, 0, ν_sym) ∩ {∫ m_{γ,ν}(f) < ∞}.
struct ReductionSplit {
  bool gaussian_condition = false;
  LevyTriplet symmetric_core;
  // m_{γ,ν} ≡ 0.
  bool asymmetry_trivial = true;
};

ReductionSplit reduction_split(const LevyTriplet& triplet, double p);

// ∫ m_{γ,ν}(f(t)) dt.
Extended asymmetry_modular(const LevyTriplet& triplet, const TestFunction& f, const QuadratureConfig& cfg = {});

// Membership by the three conditions of the split. Never throws.
MembershipVerdict is_member_by_reduction(const LevyTriplet& triplet, double p, const TestFunction& f,
                                         const QuadratureConfig& cfg = {});

// (L^{max(p,2),min(p,2)}, L^{min(p,2),max(p,2)}): the inner space lies in
// L^p(Ẋ) and L^p(Ẋ) in the outer one whenever m_{p,2}(ν) < ∞.
std::pair<DomainDescriptor, DomainDescriptor> universal_bounds(double p);

}  // namespace levywn
