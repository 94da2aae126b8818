#include "levywn/rr_exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "format.hpp"
#include "density_view.hpp"
#include "levywn/errors.hpp"
#include "overloaded.hpp"

namespace levywn {
namespace {

using detail::Overloaded;
constexpr double kInf = std::numeric_limits<double>::infinity();

GrowthProfile power(double e0, double einf, bool log0 = false, bool loginf = false) {
  GrowthProfile g;
  g.at_zero = Asymptote{e0, log0};
  g.at_infinity = Asymptote{einf, loginf};
  return g;
}

GrowthProfile infinite_profile() {
  GrowthProfile g;
  g.identically_infinite = true;
  return g;
}

GrowthProfile zero_profile() {
  GrowthProfile g;
  g.identically_zero = true;
  return g;
}

// Growth of the jump part ξ² S(1/|ξ|) + |ξ|^p L_p(1/|ξ|) of a symmetric measure.
GrowthProfile jump_growth(const LevyMeasure& nu, double p) {
  // At infinity, a density ~ |x|^{-1-β} near 0 contributes |ξ|^β against |ξ|^p.
  auto at_infinity = [p](double beta) {
    if (beta <= 0.0 && p == 0.0) return Asymptote{0.0, beta == 0.0};
    if (beta == p) return Asymptote{p, true};
    return Asymptote{std::max(beta, p), false};
  };
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return zero_profile(); },
          [p](const FiniteDiscrete& d) { return d.atoms.empty() ? zero_profile() : power(2.0, p); },
          [p](const StableTail& s) { return p >= s.alpha ? infinite_profile() : power(s.alpha, s.alpha); },
          [p](const GeneralizedLaplace&) { return p == 0.0 ? power(2.0, 0.0, false, true) : power(2.0, p); },
          [p](const CompoundPoisson&) { return power(2.0, p); },
          [&](const GenericDensity& g) {
            if (!g.tail) return GrowthProfile{};
            GrowthProfile out;
            Asymptote zero{2.0, false};
            if (const auto* t = std::get_if<PowerLawTail>(&*g.tail)) {
              if (p >= t->exponent) return infinite_profile();
              if (t->exponent < 2.0) zero = {t->exponent, false};
              if (t->exponent == 2.0) zero = {2.0, true};
            }
            out.at_zero = zero;
            out.at_infinity = at_infinity(g.origin_exponent);
            return out;
          },
          [p](const MeasureSum& s) {
            GrowthProfile acc = zero_profile();
            for (const auto& t : s.terms) acc = combine(acc, jump_growth(t, p));
            return acc;
          },
      },
      nu.variant());
}

}  // namespace

struct RREvaluator::Numeric {
  detail::DensityView view;
};

RREvaluator::RREvaluator(LevyTriplet triplet, double p, QuadratureConfig cfg, EvaluationRoute route)
    : triplet_(std::move(triplet)), p_(p), cfg_(cfg), route_(route) {
  if (!(p >= 0.0 && p <= 2.0)) throw InvalidArgument("Rajput-Rosinski order p must lie in [0, 2]");
  validate(triplet_);
  symmetric_nu_ = is_symmetric(triplet_.nu);
  if (route_ == EvaluationRoute::Quadrature) {
    numeric_ = std::make_shared<Numeric>(Numeric{detail::density_view(triplet_.nu)});
  }
}

double RREvaluator::asymmetry_part(double xi) const {
  if (xi == 0.0) return 0.0;
  if (symmetric_nu_) return std::abs(triplet_.gamma * xi);
  if (!numeric_) return asymmetry_functional(triplet_, xi, cfg_);
  const double r = 1.0 / std::abs(xi);
  double shift = 0.0;
  if (r > 1.0) shift = detail::numeric_band_first_moment(numeric_->view, 1.0, r, cfg_);
  if (r < 1.0) shift = -detail::numeric_band_first_moment(numeric_->view, r, 1.0, cfg_);
  return std::abs(triplet_.gamma * xi + xi * shift);
}

double RREvaluator::gaussian_part(double xi) const { return triplet_.sigma2 * xi * xi; }

double RREvaluator::small_jump_part(double xi) const {
  if (xi == 0.0) return 0.0;
  const double r = 1.0 / std::abs(xi);
  const Extended s = numeric_ ? detail::numeric_small_moment(numeric_->view, 2.0, r, cfg_)
                              : small_moment(triplet_.nu, 2.0, r, cfg_);
  return xi * xi * s.value;
}

Extended RREvaluator::large_jump_part(double xi) const {
  if (xi == 0.0) return Extended::finite(0.0);
  const double m = std::abs(xi);
  const Extended l = numeric_ ? detail::numeric_large_moment(numeric_->view, p_, 1.0 / m, cfg_)
                              : large_moment(triplet_.nu, p_, 1.0 / m, cfg_);
  return (p_ == 0.0 ? 1.0 : std::pow(m, p_)) * l;
}

double RREvaluator::operator()(double xi) const {
  if (!std::isfinite(xi)) throw InvalidArgument("Psi_p requires finite xi");
  if (xi == 0.0) return 0.0;
  const Extended large = large_jump_part(xi);
  if (!large.is_finite()) return kInf;
  return asymmetry_part(xi) + gaussian_part(xi) + small_jump_part(xi) + large.value;
}

GrowthProfile RREvaluator::growth() const {
  GrowthProfile g = zero_profile();
  if (triplet_.sigma2 > 0.0) g = combine(g, power(2.0, 2.0));
  if (!symmetric_nu_) return combine(g, GrowthProfile{});
  if (triplet_.gamma != 0.0) g = combine(g, power(1.0, 1.0));
  return combine(g, jump_growth(triplet_.nu, p_));
}

double psi_rr(const RREvaluator& ev, double xi) { return ev(xi); }

SandwichBounds sandwich_bounds(const RREvaluator& ev, double xi) {
  const auto& t = ev.triplet();
  if (!is_symmetric(t) || t.sigma2 != 0.0)
    throw PreconditionViolated("sandwich bounds need a symmetric triplet without Gaussian part");
  const Extended m = generalized_moment(t.nu, ev.p(), 2.0, ev.quadrature());
  if (!m.is_finite()) throw PreconditionViolated("m_{p,2} is infinite: " + m.divergence);
  const double p = ev.p();
  const PhiFunction lower = PhiFunction::rho(p, 2.0);
  const double a = std::abs(xi);
  // ρ_{2,p} with p possibly 0 is |ξ|^2 outside and |ξ|^p inside the unit ball.
  const double upper = a > 1.0 ? a * a : (p == 0.0 ? (a == 0.0 ? 0.0 : 1.0) : std::pow(a, p));
  return {m.value * lower(xi), m.value * upper};
}

std::optional<double> psi_rr_dominated_by(const RREvaluator& ev, const PhiFunction& rho,
                                          const std::vector<double>& grid) {
  if (grid.empty()) throw InvalidArgument("psi_rr_dominated_by needs a nonempty grid");
  double c = 0.0;
  for (double xi : grid) {
    const double psi = ev(xi);
    if (!std::isfinite(psi)) return std::nullopt;
    const double r = rho(xi);
    if (r == 0.0) {
      if (psi > 0.0) return std::nullopt;
      continue;
    }
    c = std::max(c, psi / r);
  }
  return c;
}

PhiFunction as_phi_function(const RREvaluator& ev) {
  auto f = [ev](double xi) { return ev(xi); };
  return PhiFunction::rajput_rosinski(f, ev.growth(), "Psi_" + detail::format_number(ev.p()));
}

}  // namespace levywn
