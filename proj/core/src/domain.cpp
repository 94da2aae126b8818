#include "levywn/domain.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "format.hpp"
#include "levywn/errors.hpp"
#include "levywn/orlicz.hpp"
#include "levywn/rr_exponents.hpp"
#include "overloaded.hpp"

namespace levywn {
namespace {

using detail::format_number;
using detail::Overloaded;
using Kind = DomainDescriptor::Kind;

std::optional<DomainDescriptor> jump_domain(const LevyMeasure& nu, double p) {
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) -> std::optional<DomainDescriptor> { return DomainDescriptor::all(); },
          [p](const FiniteDiscrete& d) -> std::optional<DomainDescriptor> {
            if (d.atoms.empty()) return DomainDescriptor::all();
            return DomainDescriptor::lp(p, 2.0);
          },
          [p](const StableTail& s) -> std::optional<DomainDescriptor> {
            if (p >= s.alpha) return DomainDescriptor::trivial();
            return DomainDescriptor::lp(s.alpha, s.alpha);
          },
          [p](const GeneralizedLaplace&) -> std::optional<DomainDescriptor> {
            if (p == 0.0) return DomainDescriptor::lp(0.0, 2.0, true);
            return DomainDescriptor::lp(p, 2.0);
          },
          [p](const CompoundPoisson&) -> std::optional<DomainDescriptor> { return DomainDescriptor::lp(p, 2.0); },
          [](const GenericDensity&) -> std::optional<DomainDescriptor> { return std::nullopt; },
          [p](const MeasureSum& s) -> std::optional<DomainDescriptor> {
            DomainDescriptor acc = DomainDescriptor::all();
            for (const auto& t : s.terms) {
              if (!is_symmetric(t)) return std::nullopt;
              const auto d = jump_domain(t, p);
              if (!d) return std::nullopt;
              acc = intersect(acc, *d);
            }
            return acc;
          },
      },
      nu.variant());
}

bool is_zero_function(const TestFunction& f) {
  if (f.amplitude() == 0.0) return true;
  if (const auto* ind = std::get_if<Indicator>(&f.shape())) return ind->value == 0.0;
  if (const auto* g = std::get_if<GridSampled>(&f.shape()))
    return std::all_of(g->values.begin(), g->values.end(), [](double v) { return v == 0.0; });
  return false;
}

MembershipVerdict verdict(MembershipStatus s, std::string route, std::string reason,
                          std::optional<double> value = std::nullopt) {
  MembershipVerdict v;
  v.status = s;
  v.route = std::move(route);
  v.reason = std::move(reason);
  v.modular_value = value;
  return v;
}

MembershipVerdict from_extended(const Extended& e, const std::string& what) {
  if (e.is_finite())
    return verdict(MembershipStatus::Member, "numeric", what + " = " + format_number(e.value) + " by quadrature",
                   e.value);
  return verdict(MembershipStatus::NotMember, "numeric", e.divergence);
}

// ρ_big ranks the large-value side: 0 < log < any positive power.
double large_rank(const DomainDescriptor& d) { return d.log_large ? 0.5 * std::numeric_limits<double>::min() : d.p0; }

}  // namespace

DomainDescriptor DomainDescriptor::lp(double p0, double pinf, bool log_large) {
  DomainDescriptor d;
  d.p0 = log_large ? 0.0 : p0;
  d.pinf = pinf;
  d.log_large = log_large;
  if (log_large)
    d.kind = Kind::LlogPinf;
  else if (p0 == 2.0 && pinf == 2.0)
    d.kind = Kind::L2;
  else if (p0 == 1.0 && pinf == 1.0)
    d.kind = Kind::L1;
  else if (p0 == 2.0 && pinf == 1.0)
    d.kind = Kind::L1capL2;
  else if (p0 == pinf)
    d.kind = Kind::Lalpha;
  else
    d.kind = Kind::Lp0Pinf;
  return d;
}

DomainDescriptor DomainDescriptor::trivial() {
  DomainDescriptor d;
  d.kind = Kind::Trivial;
  return d;
}

DomainDescriptor DomainDescriptor::all() {
  DomainDescriptor d;
  d.kind = Kind::All;
  return d;
}

DomainDescriptor DomainDescriptor::unknown() { return {}; }

std::string DomainDescriptor::name() const {
  switch (kind) {
    case Kind::L2: return "L^2";
    case Kind::L1: return "L^1";
    case Kind::L1capL2: return "L^1 cap L^2";
    case Kind::Lalpha: return "L^" + format_number(p0);
    case Kind::LlogPinf: return "L^{log," + format_number(pinf) + "}";
    case Kind::Lp0Pinf: return "L^{" + format_number(p0) + "," + format_number(pinf) + "}";
    case Kind::Trivial: return "{0}";
    case Kind::All: return "all measurable functions";
    case Kind::Unknown: break;
  }
  return "unknown";
}

DomainDescriptor intersect(const DomainDescriptor& a, const DomainDescriptor& b) {
  if (a.kind == Kind::Unknown || b.kind == Kind::Unknown) return DomainDescriptor::unknown();
  if (a.kind == Kind::Trivial || b.kind == Kind::Trivial) return DomainDescriptor::trivial();
  if (a.kind == Kind::All) return b;
  if (b.kind == Kind::All) return a;
  const DomainDescriptor& large = large_rank(a) >= large_rank(b) ? a : b;
  return DomainDescriptor::lp(large.p0, std::min(a.pinf, b.pinf), large.log_large);
}

DomainDescriptor classify_domain(const LevyTriplet& triplet, double p) {
  if (!(p >= 0.0 && p <= 2.0)) throw InvalidArgument("order p must lie in [0, 2]");
  validate(triplet);
  if (!is_symmetric(triplet.nu)) return DomainDescriptor::unknown();
  DomainDescriptor acc = DomainDescriptor::all();
  if (triplet.sigma2 > 0.0) acc = intersect(acc, DomainDescriptor::lp(2.0, 2.0));
  if (triplet.gamma != 0.0) acc = intersect(acc, DomainDescriptor::lp(1.0, 1.0));
  const auto jumps = jump_domain(triplet.nu, p);
  if (!jumps) return DomainDescriptor::unknown();
  return intersect(acc, *jumps);
}

Extended descriptor_modular(const DomainDescriptor& d, const TestFunction& f, const QuadratureConfig& cfg) {
  switch (d.kind) {
    case Kind::Unknown: throw Inconclusive("domain is unknown");
    case Kind::All: return Extended::finite(0.0);
    case Kind::Trivial:
      return is_zero_function(f) ? Extended::finite(0.0) : Extended::infinite("domain is {0} and f is nonzero");
    default: break;
  }
  if (d.log_large) return modular(PhiFunction::rho_log(d.pinf), f, cfg);
  if (d.pinf == 0.0) return lp0_zero_modular(d.p0, f, cfg);
  return modular(PhiFunction::rho(d.p0, d.pinf), f, cfg);
}

std::string to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member: return "Member";
    case MembershipStatus::NotMember: return "NotMember";
    case MembershipStatus::Inconclusive: break;
  }
  return "Inconclusive";
}

std::optional<MembershipVerdict> is_member_closed_form(const LevyTriplet& triplet, double p,
                                                       const TestFunction& f) {
  const DomainDescriptor d = classify_domain(triplet, p);
  if (d.kind == Kind::Unknown) return std::nullopt;
  const Shape& s = f.shape();
  if (!std::holds_alternative<Indicator>(s) && !std::holds_alternative<PowerLawFamily>(s) &&
      !std::holds_alternative<OUKernel>(s))
    return std::nullopt;
  const std::string in = "domain " + d.name() + ": ";
  if (is_zero_function(f)) return verdict(MembershipStatus::Member, "closed-form", in + "f = 0");
  if (d.kind == Kind::All) return verdict(MembershipStatus::Member, "closed-form", "zero noise: every f is integrable");
  if (d.kind == Kind::Trivial)
    return verdict(MembershipStatus::NotMember, "closed-form", in + "p-th moments are infinite and f is nonzero");

  if (std::holds_alternative<Indicator>(s))
    return verdict(MembershipStatus::Member, "closed-form", in + "bounded with support of finite measure");
  if (std::holds_alternative<OUKernel>(s)) {
    if (d.pinf > 0.0)
      return verdict(MembershipStatus::Member, "closed-form", in + "bounded with exponential decay");
    return verdict(MembershipStatus::NotMember, "closed-form", in + "support of infinite measure");
  }
  const auto& pl = std::get<PowerLawFamily>(s);
  const double dim = static_cast<double>(pl.dimension);
  if (!d.log_large && d.p0 > 0.0 && !(pl.alpha * d.p0 < dim))
    return verdict(MembershipStatus::NotMember, "closed-form",
                   in + "alpha*p0 = " + format_number(pl.alpha * d.p0) + " >= d = " + format_number(dim));
  if (!(pl.beta * d.pinf > dim))
    return verdict(MembershipStatus::NotMember, "closed-form",
                   in + "beta*pinf = " + format_number(pl.beta * d.pinf) + " <= d = " + format_number(dim));
  return verdict(MembershipStatus::Member, "closed-form", in + "alpha*p0 < d and beta*pinf > d");
}

MembershipVerdict is_member_numeric(const LevyTriplet& triplet, double p, const TestFunction& f,
                                    const QuadratureConfig& cfg) {
  try {
    const RREvaluator ev(triplet, p, cfg);
    const Extended e = integrate_composition(
        f, [&ev](double x) { return ev(x); }, ev.growth(), cfg);
    return from_extended(e, "int Psi_" + format_number(p) + "(f)");
  } catch (const std::exception& e) {
    return verdict(MembershipStatus::Inconclusive, "numeric", e.what());
  }
}

MembershipVerdict is_member(const LevyTriplet& triplet, double p, const TestFunction& f,
                            const QuadratureConfig& cfg) {
  try {
    if (auto v = is_member_closed_form(triplet, p, f)) return *v;
  } catch (const std::exception& e) {
    return verdict(MembershipStatus::Inconclusive, "closed-form", e.what());
  }
  return is_member_numeric(triplet, p, f, cfg);
}

ReductionSplit reduction_split(const LevyTriplet& triplet, double p) {
  if (!(p >= 0.0 && p <= 2.0)) throw InvalidArgument("order p must lie in [0, 2]");
  validate(triplet);
  ReductionSplit r;
  r.gaussian_condition = triplet.sigma2 != 0.0;
  r.symmetric_core = LevyTriplet{0.0, 0.0, symmetrized(triplet.nu)};
  r.asymmetry_trivial = triplet.gamma == 0.0 && is_symmetric(triplet.nu);
  return r;
}

Extended asymmetry_modular(const LevyTriplet& triplet, const TestFunction& f, const QuadratureConfig& cfg) {
  if (triplet.gamma == 0.0 && is_symmetric(triplet.nu)) return Extended::finite(0.0);
  const RREvaluator ev(triplet, 0.0, cfg);
  GrowthProfile g;
  if (is_symmetric(triplet.nu)) {
    g.at_zero = Asymptote{1.0, false};
    g.at_infinity = Asymptote{1.0, false};
  }
  return integrate_composition(
      f, [&ev](double x) { return ev.asymmetry_part(x); }, g, cfg);
}

MembershipVerdict is_member_by_reduction(const LevyTriplet& triplet, double p, const TestFunction& f,
                                         const QuadratureConfig& cfg) {
  try {
    const ReductionSplit split = reduction_split(triplet, p);
    std::vector<MembershipVerdict> parts;
    if (split.gaussian_condition) {
      const Extended e = descriptor_modular(DomainDescriptor::lp(2.0, 2.0), f, cfg);
      parts.push_back(e.is_finite() ? verdict(MembershipStatus::Member, "closed-form", "f in L^2", e.value)
                                    : verdict(MembershipStatus::NotMember, "closed-form", "f not in L^2: " + e.divergence));
    }
    parts.push_back(is_member(split.symmetric_core, p, f, cfg));
    if (!split.asymmetry_trivial) {
      try {
        parts.push_back(from_extended(asymmetry_modular(triplet, f, cfg), "int m_{gamma,nu}(f)"));
      } catch (const std::exception& e) {
        parts.push_back(verdict(MembershipStatus::Inconclusive, "numeric", e.what()));
      }
    }
    std::string reasons;
    bool inconclusive = false;
    for (const auto& v : parts) {
      if (v.status == MembershipStatus::NotMember) return verdict(MembershipStatus::NotMember, v.route, v.reason);
      inconclusive |= v.status == MembershipStatus::Inconclusive;
      reasons += (reasons.empty() ? "" : "; ") + v.reason;
    }
    return verdict(inconclusive ? MembershipStatus::Inconclusive : MembershipStatus::Member, "reduction", reasons);
  } catch (const std::exception& e) {
    return verdict(MembershipStatus::Inconclusive, "reduction", e.what());
  }
}

std::pair<DomainDescriptor, DomainDescriptor> universal_bounds(double p) {
  if (!(p >= 0.0) || !std::isfinite(p)) throw InvalidArgument("universal bounds need p >= 0");
  return {DomainDescriptor::lp(std::max(p, 2.0), std::min(p, 2.0)),
          DomainDescriptor::lp(std::min(p, 2.0), std::max(p, 2.0))};
}

}  // namespace levywn
