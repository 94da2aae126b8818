#include "levywn/levy_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "density_view.hpp"
#include "levywn/errors.hpp"
#include "overloaded.hpp"

namespace levywn {
namespace {

using detail::Overloaded;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double atom_power(double location, double mass, double q) {
  return q == 0.0 ? mass : mass * std::pow(std::abs(location), q);
}

double e1(double x) { return boost::math::expint(1, x); }

std::vector<FiniteDiscrete::Atom> merged_atoms(std::vector<FiniteDiscrete::Atom> atoms) {
  std::map<double, double> by_location;
  for (const auto& a : atoms) by_location[a.location] += a.mass;
  std::vector<FiniteDiscrete::Atom> out;
  for (const auto& [x, m] : by_location) out.push_back({x, m});
  return out;
}

// Atom list of a compound Poisson measure with finitely supported jumps.
std::optional<std::vector<FiniteDiscrete::Atom>> atoms_of(const LevyMeasure& nu) {
  if (const auto* d = nu.get_if<FiniteDiscrete>()) return d->atoms;
  if (const auto* cp = nu.get_if<CompoundPoisson>()) {
    std::vector<FiniteDiscrete::Atom> out;
    if (const auto* t = std::get_if<TwoPoint>(&cp->jumps)) {
      if (t->p > 0.0) out.push_back({t->a, cp->lambda * t->p});
      if (t->p < 1.0) out.push_back({-t->a, cp->lambda * (1.0 - t->p)});
      return out;
    }
    if (const auto* dj = std::get_if<DiscreteJumps>(&cp->jumps)) {
      for (std::size_t i = 0; i < dj->values.size(); ++i)
        if (dj->probs[i] > 0.0) out.push_back({dj->values[i], cp->lambda * dj->probs[i]});
      return out;
    }
  }
  return std::nullopt;
}

bool same_jumps(const JumpDistribution& a, const JumpDistribution& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      Overloaded{
          [&](const TwoPoint& x) {
            const auto& y = std::get<TwoPoint>(b);
            return x.a == y.a && x.p == y.p;
          },
          [&](const GaussianJumps& x) {
            const auto& y = std::get<GaussianJumps>(b);
            return x.mean == y.mean && x.variance == y.variance;
          },
          [&](const UniformJumps& x) {
            const auto& y = std::get<UniformJumps>(b);
            return x.lo == y.lo && x.hi == y.hi;
          },
          [&](const DiscreteJumps& x) {
            const auto& y = std::get<DiscreteJumps>(b);
            return x.values == y.values && x.probs == y.probs;
          },
      },
      a);
}

// Closed-family merge of two measures, or nothing.
std::optional<LevyMeasure> try_merge(const LevyMeasure& a, const LevyMeasure& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  if (const auto* sa = a.get_if<StableTail>()) {
    if (const auto* sb = b.get_if<StableTail>(); sb && sa->alpha == sb->alpha)
      return LevyMeasure(StableTail{sa->alpha, sa->c + sb->c});
  }
  if (const auto* la = a.get_if<GeneralizedLaplace>()) {
    if (const auto* lb = b.get_if<GeneralizedLaplace>(); lb && la->sigma2 == lb->sigma2)
      return LevyMeasure(GeneralizedLaplace{la->tau + lb->tau, la->sigma2});
  }
  if (const auto* ca = a.get_if<CompoundPoisson>()) {
    if (const auto* cb = b.get_if<CompoundPoisson>(); cb && same_jumps(ca->jumps, cb->jumps))
      return LevyMeasure(CompoundPoisson{ca->lambda + cb->lambda, ca->jumps});
  }
  auto xa = atoms_of(a);
  auto xb = atoms_of(b);
  if (xa && xb) {
    xa->insert(xa->end(), xb->begin(), xb->end());
    return LevyMeasure(FiniteDiscrete{merged_atoms(std::move(*xa))});
  }
  return std::nullopt;
}

}  // namespace

double GeneralizedLaplace::rate() const { return std::sqrt(2.0 / sigma2); }

double stable_constant(double alpha) {
  if (alpha == 1.0) return 0.5 * std::numbers::pi;
  return std::tgamma(1.0 - alpha) * std::cos(0.5 * std::numbers::pi * alpha) / alpha;
}

std::string LevyMeasure::kind_name() const {
  return std::visit(Overloaded{
                        [](const ZeroMeasure&) { return "zero"; },
                        [](const FiniteDiscrete&) { return "finite_discrete"; },
                        [](const StableTail&) { return "stable"; },
                        [](const GeneralizedLaplace&) { return "generalized_laplace"; },
                        [](const CompoundPoisson&) { return "compound_poisson"; },
                        [](const GenericDensity&) { return "generic_density"; },
                        [](const MeasureSum&) { return "sum"; },
                    },
                    v_);
}

void validate(const LevyMeasure& nu) {
  std::visit(
      Overloaded{
          [](const ZeroMeasure&) {},
          [](const FiniteDiscrete& d) {
            for (const auto& a : d.atoms) {
              if (!std::isfinite(a.location) || a.location == 0.0)
                throw InvalidArgument("atoms must have finite nonzero locations");
              if (!(a.mass > 0.0) || !std::isfinite(a.mass))
                throw InvalidArgument("atoms must have finite positive mass");
            }
          },
          [](const StableTail& s) {
            if (!(s.alpha > 0.0 && s.alpha < 2.0)) throw InvalidArgument("stable alpha must lie in (0, 2)");
            if (!(s.c > 0.0) || !std::isfinite(s.c)) throw InvalidArgument("stable scale must be positive");
          },
          [](const GeneralizedLaplace& g) {
            if (!(g.tau > 0.0) || !std::isfinite(g.tau)) throw InvalidArgument("Laplace tau must be positive");
            if (!(g.sigma2 > 0.0) || !std::isfinite(g.sigma2))
              throw InvalidArgument("Laplace sigma2 must be positive");
          },
          [](const CompoundPoisson& cp) {
            if (!(cp.lambda > 0.0) || !std::isfinite(cp.lambda))
              throw InvalidArgument("compound Poisson rate must be positive");
            validate(cp.jumps);
          },
          [](const GenericDensity& g) {
            if (!g.density) throw InvalidArgument("generic density needs a density function");
            if (!(g.origin_exponent < 2.0))
              throw InvalidArgument("generic density origin exponent must be < 2");
            if (g.tail) {
              std::visit(Overloaded{
                             [](const PowerLawTail& t) {
                               if (!(t.exponent > 0.0))
                                 throw InvalidArgument("power-law tail exponent must be positive");
                             },
                             [](const ExponentialTail& t) {
                               if (!(t.rate > 0.0))
                                 throw InvalidArgument("exponential tail rate must be positive");
                             },
                             [](const CompactSupport& c) {
                               if (!(c.radius > 0.0))
                                 throw InvalidArgument("compact support radius must be positive");
                             },
                         },
                         *g.tail);
            }
          },
          [](const MeasureSum& s) {
            for (const auto& t : s.terms) validate(t);
          },
      },
      nu.variant());
}

bool is_zero(const LevyMeasure& nu) {
  if (nu.holds<ZeroMeasure>()) return true;
  if (const auto* d = nu.get_if<FiniteDiscrete>()) return d->atoms.empty();
  if (const auto* s = nu.get_if<MeasureSum>())
    return std::all_of(s->terms.begin(), s->terms.end(), [](const auto& t) { return is_zero(t); });
  return false;
}

bool is_symmetric(const LevyMeasure& nu) {
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return true; },
          [](const FiniteDiscrete& d) {
            const auto atoms = merged_atoms(d.atoms);
            for (const auto& a : atoms) {
              const auto it = std::find_if(atoms.begin(), atoms.end(),
                                           [&](const auto& b) { return b.location == -a.location; });
              if (it == atoms.end() || std::abs(it->mass - a.mass) > 1e-15 * a.mass) return false;
            }
            return true;
          },
          [](const StableTail&) { return true; },
          [](const GeneralizedLaplace&) { return true; },
          [](const CompoundPoisson& cp) { return is_symmetric(cp.jumps); },
          [](const GenericDensity& g) { return g.symmetric; },
          [](const MeasureSum& s) {
            // Atom-bearing terms are pooled; other asymmetric terms need a mirrored partner.
            std::vector<FiniteDiscrete::Atom> pooled;
            std::vector<const CompoundPoisson*> unpaired;
            for (const auto& t : s.terms) {
              if (auto atoms = atoms_of(t)) {
                pooled.insert(pooled.end(), atoms->begin(), atoms->end());
              } else if (!is_symmetric(t)) {
                const auto* cp = t.get_if<CompoundPoisson>();
                if (!cp) return false;
                unpaired.push_back(cp);
              }
            }
            if (!is_symmetric(LevyMeasure(FiniteDiscrete{pooled}))) return false;
            while (!unpaired.empty()) {
              const CompoundPoisson* head = unpaired.back();
              unpaired.pop_back();
              const auto mirror = reflected(head->jumps);
              const auto it = std::find_if(unpaired.begin(), unpaired.end(), [&](const auto* cp) {
                return cp->lambda == head->lambda && same_jumps(cp->jumps, mirror);
              });
              if (it == unpaired.end()) return false;
              unpaired.erase(it);
            }
            return true;
          },
      },
      nu.variant());
}

bool has_finite_mass(const LevyMeasure& nu) {
  return std::visit(Overloaded{
                        [](const ZeroMeasure&) { return true; },
                        [](const FiniteDiscrete&) { return true; },
                        [](const StableTail&) { return false; },
                        [](const GeneralizedLaplace&) { return false; },
                        [](const CompoundPoisson&) { return true; },
                        [](const GenericDensity& g) { return g.origin_exponent < 0.0; },
                        [](const MeasureSum& s) {
                          return std::all_of(s.terms.begin(), s.terms.end(),
                                             [](const auto& t) { return has_finite_mass(t); });
                        },
                    },
                    nu.variant());
}

double mass_beyond(const LevyMeasure& nu, double r, const QuadratureConfig& cfg) {
  if (r < 0.0) throw InvalidArgument("mass_beyond requires r >= 0");
  if (r == 0.0 && !has_finite_mass(nu)) return kInf;
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return 0.0; },
          [r](const FiniteDiscrete& d) {
            double acc = 0.0;
            for (const auto& a : d.atoms)
              if (std::abs(a.location) > r) acc += a.mass;
            return acc;
          },
          [r](const StableTail& s) { return 2.0 * s.c * std::pow(r, -s.alpha) / s.alpha; },
          [r](const GeneralizedLaplace& g) { return 2.0 * g.tau * e1(g.rate() * r); },
          [r](const CompoundPoisson& cp) { return cp.lambda * prob_beyond(cp.jumps, r); },
          [&](const GenericDensity&) {
            return detail::numeric_large_moment(detail::density_view(nu), 0.0, r, cfg).value;
          },
          [&](const MeasureSum& s) {
            double acc = 0.0;
            for (const auto& t : s.terms) acc += mass_beyond(t, r, cfg);
            return acc;
          },
      },
      nu.variant());
}

Extended small_moment(const LevyMeasure& nu, double q, double r, const QuadratureConfig& cfg) {
  if (q < 0.0 || r < 0.0) throw InvalidArgument("small_moment requires q, r >= 0");
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return Extended::finite(0.0); },
          [&](const FiniteDiscrete& d) {
            double acc = 0.0;
            for (const auto& a : d.atoms)
              if (std::abs(a.location) <= r) acc += atom_power(a.location, a.mass, q);
            return Extended::finite(acc);
          },
          [&](const StableTail& s) {
            if (r == 0.0) return Extended::finite(0.0);
            if (q <= s.alpha) {
              return Extended::infinite("origin divergence: stable density |x|^{-1-" + fmt(s.alpha) +
                                        "} is not integrable against |x|^" + fmt(q));
            }
            return Extended::finite(2.0 * s.c * std::pow(r, q - s.alpha) / (q - s.alpha));
          },
          [&](const GeneralizedLaplace& g) {
            if (r == 0.0) return Extended::finite(0.0);
            if (q == 0.0) return Extended::infinite("origin divergence: Laplace density ~ 1/|x| has infinite mass");
            const double k = g.rate();
            return Extended::finite(2.0 * g.tau * std::pow(k, -q) * boost::math::tgamma_lower(q, k * r));
          },
          [&](const CompoundPoisson& cp) { return Extended::finite(cp.lambda * small_moment(cp.jumps, q, r)); },
          [&](const GenericDensity&) {
            return detail::numeric_small_moment(detail::density_view(nu), q, r, cfg);
          },
          [&](const MeasureSum& s) {
            Extended acc = Extended::finite(0.0);
            for (const auto& t : s.terms) acc = acc + small_moment(t, q, r, cfg);
            return acc;
          },
      },
      nu.variant());
}

Extended large_moment(const LevyMeasure& nu, double p, double r, const QuadratureConfig& cfg) {
  if (p < 0.0 || !(r > 0.0)) throw InvalidArgument("large_moment requires p >= 0, r > 0");
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return Extended::finite(0.0); },
          [&](const FiniteDiscrete& d) {
            double acc = 0.0;
            for (const auto& a : d.atoms)
              if (std::abs(a.location) > r) acc += atom_power(a.location, a.mass, p);
            return Extended::finite(acc);
          },
          [&](const StableTail& s) {
            if (p >= s.alpha) {
              return Extended::infinite("tail divergence: stable density |x|^{-1-" + fmt(s.alpha) +
                                        "} has no moment of order " + fmt(p));
            }
            return Extended::finite(2.0 * s.c * std::pow(r, p - s.alpha) / (s.alpha - p));
          },
          [&](const GeneralizedLaplace& g) {
            const double k = g.rate();
            if (p == 0.0) return Extended::finite(2.0 * g.tau * e1(k * r));
            return Extended::finite(2.0 * g.tau * std::pow(k, -p) * boost::math::tgamma(p, k * r));
          },
          [&](const CompoundPoisson& cp) { return Extended::finite(cp.lambda * large_moment(cp.jumps, p, r)); },
          [&](const GenericDensity&) {
            return detail::numeric_large_moment(detail::density_view(nu), p, r, cfg);
          },
          [&](const MeasureSum& s) {
            Extended acc = Extended::finite(0.0);
            for (const auto& t : s.terms) acc = acc + large_moment(t, p, r, cfg);
            return acc;
          },
      },
      nu.variant());
}

double band_first_moment(const LevyMeasure& nu, double lo, double hi, const QuadratureConfig& cfg) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
    throw InvalidArgument("band_first_moment requires 0 < lo <= hi < inf");
  if (lo == hi) return 0.0;
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return 0.0; },
          [&](const FiniteDiscrete& d) {
            double acc = 0.0;
            for (const auto& a : d.atoms) {
              const double m = std::abs(a.location);
              if (m > lo && m <= hi) acc += a.mass * a.location;
            }
            return acc;
          },
          [](const StableTail&) { return 0.0; },
          [](const GeneralizedLaplace&) { return 0.0; },
          [&](const CompoundPoisson& cp) {
            return cp.lambda * (truncated_mean(cp.jumps, hi) - truncated_mean(cp.jumps, lo));
          },
          [&](const GenericDensity&) {
            return detail::numeric_band_first_moment(detail::density_view(nu), lo, hi, cfg);
          },
          [&](const MeasureSum& s) {
            double acc = 0.0;
            for (const auto& t : s.terms) acc += band_first_moment(t, lo, hi, cfg);
            return acc;
          },
      },
      nu.variant());
}

std::complex<double> jump_exponent(const LevyMeasure& nu, double xi, const QuadratureConfig& cfg) {
  using C = std::complex<double>;
  if (xi == 0.0) return {0.0, 0.0};
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return C(0.0, 0.0); },
          [&](const FiniteDiscrete& d) {
            C acc(0.0, 0.0);
            for (const auto& a : d.atoms) {
              const double y = a.location * xi;
              const double s = std::sin(0.5 * y);
              const double comp = std::abs(a.location) <= 1.0 ? y : 0.0;
              acc += a.mass * C(-2.0 * s * s, std::sin(y) - comp);
            }
            return acc;
          },
          [&](const StableTail& s) {
            return C(-2.0 * s.c * stable_constant(s.alpha) * std::pow(std::abs(xi), s.alpha), 0.0);
          },
          [&](const GeneralizedLaplace& g) {
            const double k = g.rate();
            return C(-g.tau * std::log1p(xi * xi / (k * k)), 0.0);
          },
          [&](const CompoundPoisson& cp) {
            const C phi = characteristic_function(cp.jumps, xi);
            return cp.lambda * (phi - 1.0) - C(0.0, xi * cp.lambda * truncated_mean(cp.jumps, 1.0));
          },
          [&](const GenericDensity&) {
            return detail::numeric_jump_exponent(detail::density_view(nu), xi, cfg);
          },
          [&](const MeasureSum& s) {
            C acc(0.0, 0.0);
            for (const auto& t : s.terms) acc += jump_exponent(t, xi, cfg);
            return acc;
          },
      },
      nu.variant());
}

Extended generalized_moment(const LevyMeasure& nu, double p, double q, const QuadratureConfig& cfg) {
  if (p < 0.0 || q < 0.0) throw InvalidArgument("generalized_moment requires p, q >= 0");
  return large_moment(nu, p, 1.0, cfg) + small_moment(nu, q, 1.0, cfg);
}

double pruitt_index(const LevyMeasure& nu) {
  return std::visit(Overloaded{
                        [](const ZeroMeasure&) { return 2.0; },
                        [](const FiniteDiscrete&) { return 2.0; },
                        [](const StableTail& s) { return s.alpha; },
                        [](const GeneralizedLaplace&) { return 2.0; },
                        [](const CompoundPoisson&) { return 2.0; },
                        [](const GenericDensity& g) {
                          if (!g.tail) throw Inconclusive("generic density has no tail classification");
                          if (const auto* t = std::get_if<PowerLawTail>(&*g.tail))
                            return std::min(t->exponent, 2.0);
                          return 2.0;
                        },
                        [](const MeasureSum& s) {
                          double acc = 2.0;
                          for (const auto& t : s.terms) acc = std::min(acc, pruitt_index(t));
                          return acc;
                        },
                    },
                    nu.variant());
}

double blumenthal_getoor_index(const LevyMeasure& nu) {
  return std::visit(Overloaded{
                        [](const ZeroMeasure&) { return 0.0; },
                        [](const FiniteDiscrete&) { return 0.0; },
                        [](const StableTail& s) { return s.alpha; },
                        [](const GeneralizedLaplace&) { return 0.0; },
                        [](const CompoundPoisson&) { return 0.0; },
                        [](const GenericDensity& g) { return std::clamp(g.origin_exponent, 0.0, 2.0); },
                        [](const MeasureSum& s) {
                          double acc = 0.0;
                          for (const auto& t : s.terms) acc = std::max(acc, blumenthal_getoor_index(t));
                          return acc;
                        },
                    },
                    nu.variant());
}

LevyMeasure pushforward(const LevyMeasure& nu, double a) {
  if (a == 0.0 || !std::isfinite(a)) throw InvalidArgument("pushforward requires a finite nonzero factor");
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return LevyMeasure(ZeroMeasure{}); },
          [a](const FiniteDiscrete& d) {
            FiniteDiscrete out = d;
            for (auto& atom : out.atoms) atom.location *= a;
            return LevyMeasure(out);
          },
          [a](const StableTail& s) { return LevyMeasure(StableTail{s.alpha, s.c * std::pow(std::abs(a), s.alpha)}); },
          [a](const GeneralizedLaplace& g) { return LevyMeasure(GeneralizedLaplace{g.tau, g.sigma2 * a * a}); },
          [a](const CompoundPoisson& cp) { return LevyMeasure(CompoundPoisson{cp.lambda, scaled(cp.jumps, a)}); },
          [a](const GenericDensity& g) {
            GenericDensity out = g;
            const auto f = g.density;
            out.density = [f, a](double x) { return f(x / a) / std::abs(a); };
            if (out.tail) {
              std::visit(Overloaded{
                             [](PowerLawTail&) {},
                             [a](ExponentialTail& t) { t.rate /= std::abs(a); },
                             [a](CompactSupport& c) { c.radius *= std::abs(a); },
                         },
                         *out.tail);
            }
            for (double& b : out.breakpoints) b *= std::abs(a);
            return LevyMeasure(out);
          },
          [a](const MeasureSum& s) {
            MeasureSum out;
            for (const auto& t : s.terms) out.terms.push_back(pushforward(t, a));
            return LevyMeasure(out);
          },
      },
      nu.variant());
}

LevyMeasure symmetrized(const LevyMeasure& nu) {
  return std::visit(
      Overloaded{
          [&](const ZeroMeasure&) { return nu; },
          [&](const FiniteDiscrete& d) {
            std::vector<FiniteDiscrete::Atom> atoms;
            for (const auto& a : d.atoms) {
              atoms.push_back({a.location, 0.5 * a.mass});
              atoms.push_back({-a.location, 0.5 * a.mass});
            }
            return LevyMeasure(FiniteDiscrete{merged_atoms(std::move(atoms))});
          },
          [&](const StableTail&) { return nu; },
          [&](const GeneralizedLaplace&) { return nu; },
          [&](const CompoundPoisson& cp) {
            if (is_symmetric(cp.jumps)) return nu;
            if (const auto* t = std::get_if<TwoPoint>(&cp.jumps))
              return LevyMeasure(CompoundPoisson{cp.lambda, TwoPoint{t->a, 0.5}});
            if (const auto* dj = std::get_if<DiscreteJumps>(&cp.jumps)) {
              std::map<double, double> probs;
              for (std::size_t i = 0; i < dj->values.size(); ++i) {
                probs[dj->values[i]] += 0.5 * dj->probs[i];
                probs[-dj->values[i]] += 0.5 * dj->probs[i];
              }
              DiscreteJumps out;
              for (const auto& [x, w] : probs) {
                out.values.push_back(x);
                out.probs.push_back(w);
              }
              return LevyMeasure(CompoundPoisson{cp.lambda, out});
            }
            MeasureSum s;
            s.terms.push_back(CompoundPoisson{0.5 * cp.lambda, cp.jumps});
            s.terms.push_back(CompoundPoisson{0.5 * cp.lambda, reflected(cp.jumps)});
            return LevyMeasure(s);
          },
          [&](const GenericDensity& g) {
            if (g.symmetric) return nu;
            GenericDensity out = g;
            const auto f = g.density;
            out.density = [f](double x) { return 0.5 * (f(x) + f(-x)); };
            out.symmetric = true;
            return LevyMeasure(out);
          },
          [&](const MeasureSum& s) {
            MeasureSum out;
            for (const auto& t : s.terms) out.terms.push_back(symmetrized(t));
            return LevyMeasure(out);
          },
      },
      nu.variant());
}

LevyMeasure add(const LevyMeasure& a, const LevyMeasure& b, SumPolicy policy) {
  std::vector<LevyMeasure> terms;
  auto push = [&](const LevyMeasure& m) {
    if (const auto* s = m.get_if<MeasureSum>()) {
      for (const auto& t : s->terms) terms.push_back(t);
    } else {
      terms.push_back(m);
    }
  };
  push(a);
  push(b);
  std::vector<LevyMeasure> merged;
  for (const auto& t : terms) {
    bool absorbed = false;
    for (auto& m : merged) {
      if (auto r = try_merge(m, t)) {
        m = *r;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) merged.push_back(t);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& m) { return is_zero(m); }),
               merged.end());
  if (merged.empty()) return ZeroMeasure{};
  if (merged.size() == 1) return merged.front();
  if (policy == SumPolicy::ClosedOnly) {
    throw UnsupportedCombination("sum of " + a.kind_name() + " and " + b.kind_name() +
                                 " has no closed-family representation");
  }
  return MeasureSum{std::move(merged)};
}

}  // namespace levywn
