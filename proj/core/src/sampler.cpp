#include "levywn/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/expint.hpp>

#include "format.hpp"
#include "levywn/errors.hpp"
#include "levywn/rr_exponents.hpp"
#include "overloaded.hpp"
#include "parallel.hpp"

namespace levywn {
namespace {

using detail::Overloaded;
using Jump = std::function<double(RngStream&)>;

constexpr double kInf = std::numeric_limits<double>::infinity();

double sphere_area(std::size_t d) {
  const double h = 0.5 * static_cast<double>(d);
  return static_cast<double>(d) * std::pow(std::numbers::pi, h) / std::tgamma(h + 1.0);
}

GrowthProfile power_growth(double e0, double einf) {
  GrowthProfile g;
  g.at_zero = Asymptote{e0, false};
  g.at_infinity = Asymptote{einf, false};
  return g;
}

void flatten(const LevyMeasure& nu, std::vector<LevyMeasure>& out) {
  if (const auto* s = nu.get_if<MeasureSum>()) {
    for (const auto& t : s->terms) flatten(t, out);
  } else if (!nu.holds<ZeroMeasure>()) {
    out.push_back(nu);
  }
}

double sample_jump_law(const JumpDistribution& d, RngStream& rng) {
  return std::visit(Overloaded{
                        [&](const TwoPoint& t) { return rng.uniform() < t.p ? t.a : -t.a; },
                        [&](const GaussianJumps& g) { return g.mean + std::sqrt(g.variance) * rng.normal(); },
                        [&](const UniformJumps& u) { return rng.uniform(u.lo, u.hi); },
                        [&](const DiscreteJumps& dj) {
                          double total = 0.0;
                          for (double p : dj.probs) total += p;
                          double u = rng.uniform() * total;
                          for (std::size_t i = 0; i + 1 < dj.values.size(); ++i) {
                            if (u < dj.probs[i]) return dj.values[i];
                            u -= dj.probs[i];
                          }
                          return dj.values.back();
                        },
                    },
                    d);
}

// Density ∝ e^{-y}/y on (a, inf), a > 0.
double sample_exp_over_y(double a, RngStream& rng) {
  if (a >= 1.0) {
    for (;;) {
      const double y = a + rng.exponential();
      if (rng.uniform() * y < a) return y;
    }
  }
  const double w_head = boost::math::expint(1, a) - boost::math::expint(1, 1.0);
  const double w_tail = boost::math::expint(1, 1.0);
  const bool head = rng.uniform() * (w_head + w_tail) < w_head;
  for (;;) {
    if (head) {
      const double y = a * std::pow(1.0 / a, rng.uniform());
      if (rng.uniform() < std::exp(-y)) return y;
    } else {
      const double y = 1.0 + rng.exponential();
      if (rng.uniform() * y < 1.0) return y;
    }
  }
}

// Sizes of the jumps |x| > eps of a single-family measure, normalized.
Jump jump_sampler(const LevyMeasure& nu, double eps) {
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) -> Jump { return [](RngStream&) { return 0.0; }; },
          [eps](const FiniteDiscrete& d) -> Jump {
            std::vector<double> loc;
            std::vector<double> cum;
            double acc = 0.0;
            for (const auto& a : d.atoms) {
              if (std::abs(a.location) > eps && a.mass > 0.0) {
                acc += a.mass;
                loc.push_back(a.location);
                cum.push_back(acc);
              }
            }
            return [loc, cum, acc](RngStream& rng) {
              if (loc.empty()) return 0.0;
              const double u = rng.uniform() * acc;
              const auto it = std::upper_bound(cum.begin(), cum.end(), u);
              return loc[std::min<std::size_t>(static_cast<std::size_t>(it - cum.begin()), loc.size() - 1)];
            };
          },
          [eps](const StableTail& s) -> Jump {
            const double alpha = s.alpha;
            return [eps, alpha](RngStream& rng) {
              const double r = eps * std::pow(rng.uniform(), -1.0 / alpha);
              return rng.uniform() < 0.5 ? -r : r;
            };
          },
          [eps](const GeneralizedLaplace& g) -> Jump {
            const double k = g.rate();
            return [eps, k](RngStream& rng) {
              const double r = sample_exp_over_y(k * eps, rng) / k;
              return rng.uniform() < 0.5 ? -r : r;
            };
          },
          [eps](const CompoundPoisson& cp) -> Jump {
            const JumpDistribution law = cp.jumps;
            return [eps, law](RngStream& rng) {
              for (;;) {
                const double x = sample_jump_law(law, rng);
                if (std::abs(x) > eps || eps == 0.0) return x;
              }
            };
          },
          [](const GenericDensity&) -> Jump {
            throw UnsupportedMeasure("no jump-size generator for a generic Lévy density");
          },
          [](const MeasureSum&) -> Jump { throw UnsupportedMeasure("measure sums are sampled term by term"); },
      },
      nu.variant());
}

// Deterministic part of the simulated jumps per unit ∫f: the compensator of
// the band between eps and 1 under the triplet's truncation.
double compensation(const LevyMeasure& nu, double eps) {
  if (is_symmetric(nu) || eps == 1.0) return 0.0;
  if (eps > 1.0) return band_first_moment(nu, 1.0, eps);
  if (eps > 0.0) return -band_first_moment(nu, eps, 1.0);
  if (const auto* d = nu.get_if<FiniteDiscrete>()) {
    double acc = 0.0;
    for (const auto& a : d->atoms)
      if (std::abs(a.location) <= 1.0) acc += a.mass * a.location;
    return -acc;
  }
  if (const auto* cp = nu.get_if<CompoundPoisson>()) return -cp->lambda * truncated_mean(cp->jumps, 1.0);
  throw InvalidArgument("a zero cutoff needs a finite measure");
}

Extended full_integral(const TestFunction& f, const std::function<double(double)>& h, const GrowthProfile& g,
                       const QuadratureConfig& cfg) {
  return integrate_composition(f, h, g, cfg);
}

// Per-axis window [lo, hi] in shape coordinates mapped through the affine
// change of f.
Box map_window(const TestFunction& f, const std::vector<double>& ulo, const std::vector<double>& uhi) {
  Box b;
  const double s = f.dilation();
  for (std::size_t i = 0; i < ulo.size(); ++i) {
    double x = f.shift()[i] + ulo[i] / s;
    double y = f.shift()[i] + uhi[i] / s;
    if (x > y) std::swap(x, y);
    b.lo.push_back(x);
    b.hi.push_back(y);
  }
  return b;
}

}  // namespace

PairingTarget make_target(const LevyTriplet& triplet, const TestFunction& f, const SamplerConfig& cfg) {
  validate(triplet);
  PairingTarget t;
  t.dimension = f.dimension();
  t.value = [f](std::span<const double> x) { return f(x); };
  const QuadratureConfig qc = cfg.quadrature;
  t.integral = [f, qc](const std::function<double(double)>& h, const GrowthProfile& g) {
    return full_integral(f, h, g, qc);
  };

  if (auto box = f.support_box()) {
    t.window = *box;
    return t;
  }
  const bool power = std::holds_alternative<PowerLawFamily>(f.shape());
  const bool ou = std::holds_alternative<OUKernel>(f.shape());
  if (!power && !ou) {
    t.window_error = "test function has no bounded support";
    return t;
  }
  const std::size_t d = f.dimension();
  const double a = std::abs(f.amplitude());
  const double jac = std::pow(std::abs(f.dilation()), -static_cast<double>(d));
  if (a == 0.0) {
    t.window = map_window(f, std::vector<double>(d, -1.0), std::vector<double>(d, 1.0));
    return t;
  }

  const RREvaluator ev(symmetrize(triplet), 0.0, qc);
  const GrowthProfile g = ev.growth();
  auto h = [&ev](double x) { return ev(x); };
  if (g.identically_zero) {
    t.window = map_window(f, std::vector<double>(d, -1.0), std::vector<double>(d, 1.0));
    return t;
  }
  if (!g.at_zero || g.at_zero->exponent <= 0.0) {
    t.window_error = "growth of Psi at the origin does not certify a tail bound";
    return t;
  }
  const double e0 = g.at_zero->exponent;
  try {
    const Extended total = integrate_composition(f, h, g, qc);
    if (!total.is_finite()) {
      t.window_error = "integral of Psi(f) diverges: " + total.divergence;
      return t;
    }
    std::function<double(double)> tail;
    if (power) {
      const auto& p = std::get<PowerLawFamily>(f.shape());
      const double k = static_cast<double>(d) - 1.0 - p.beta * e0;
      if (!(k < -1.0)) {
        t.window_error = "power-law tail is not integrable against Psi";
        return t;
      }
      tail = [&, k, p](double r) {
        auto g_r = [&](double s) { return h(a * std::pow(s, -p.beta)) * std::pow(s, static_cast<double>(d) - 1.0); };
        return sphere_area(d) * jac * integrate_to_infinity(g_r, r, k, qc);
      };
    } else {
      const double theta = std::get<OUKernel>(f.shape()).theta;
      tail = [&, theta](double l) {
        auto g_x = [&](double x) { return h(x) / x; };
        return jac / theta * integrate_from_origin(g_x, a * std::exp(-theta * l), e0 - 1.0, qc);
      };
    }
    double r = 1.0;
    while (tail(r) > cfg.truncation_tol * total.value) {
      r *= 1.25;
      if (r > 1e8) throw TruncationError("support truncation does not reach the tolerance below radius 1e8");
    }
    if (power) {
      t.window = map_window(f, std::vector<double>(d, -r), std::vector<double>(d, r));
    } else {
      t.window = map_window(f, {0.0}, {r});
    }
  } catch (const TruncationError& e) {
    t.window_error = e.what();
  } catch (const Error& e) {
    t.window_error = std::string("truncation failed: ") + e.what();
  }
  return t;
}

struct PairingSampler::Impl {
  struct Poisson {
    double rate;
    Jump jump;
  };
  struct Stable {
    double alpha;
    double scale;
  };

  PairingTarget target;
  double drift = 0.0;
  double gauss_sd = 0.0;
  double small_var = 0.0;
  double eps = 0.0;
  double expected = 0.0;
  std::vector<Poisson> poisson;
  std::vector<Stable> stable;
};

PairingSampler::PairingSampler(const LevyTriplet& triplet, PairingTarget target, std::size_t batch_size,
                               const SamplerConfig& cfg)
    : impl_(std::make_unique<Impl>()) {
  validate(triplet);
  Impl& m = *impl_;
  m.target = std::move(target);
  std::vector<LevyMeasure> leaves;
  flatten(triplet.nu, leaves);

  std::vector<LevyMeasure> jumpy;
  for (const auto& leaf : leaves) {
    if (const auto* s = leaf.get_if<StableTail>(); s && cfg.stable_shortcut) {
      const double alpha = s->alpha;
      const Extended norm = m.target.integral([alpha](double x) { return std::pow(std::abs(x), alpha); },
                                              power_growth(alpha, alpha));
      if (!norm.is_finite()) throw PreconditionViolated("f is not in L^alpha: " + norm.divergence);
      const double scale = std::pow(2.0 * s->c * stable_constant(alpha) * norm.value, 1.0 / alpha);
      if (scale > 0.0) m.stable.push_back({alpha, scale});
    } else if (leaf.holds<GenericDensity>()) {
      throw UnsupportedMeasure("no jump-size generator for a generic Lévy density");
    } else {
      jumpy.push_back(leaf);
    }
  }

  if (!jumpy.empty() && !m.target.window)
    throw TruncationError("no jump window for the test function: " + m.target.window_error);
  const double vol = m.target.window ? m.target.window->volume() : 0.0;

  bool infinite_activity = false;
  for (const auto& leaf : jumpy) infinite_activity = infinite_activity || !has_finite_mass(leaf);
  double eps_inf = 0.0;
  if (cfg.eps_cutoff) {
    if (!(*cfg.eps_cutoff >= 0.0)) throw InvalidArgument("eps cutoff must be nonnegative");
    if (infinite_activity && *cfg.eps_cutoff == 0.0)
      throw InvalidArgument("a zero cutoff needs a finite measure");
    eps_inf = *cfg.eps_cutoff;
  } else if (infinite_activity) {
    const double n = static_cast<double>(std::max<std::size_t>(batch_size, 1));
    auto load = [&](double e) {
      double acc = 0.0;
      for (const auto& leaf : jumpy)
        if (!has_finite_mass(leaf)) acc += mass_beyond(leaf, e, cfg.quadrature);
      return n * vol * acc;
    };
    double lo = cfg.eps_floor;
    if (load(lo) <= cfg.jump_budget) {
      eps_inf = lo;
    } else {
      double hi = lo;
      while (load(hi) > cfg.jump_budget) {
        lo = hi;
        hi *= 2.0;
      }
      for (int it = 0; it < 60; ++it) {
        const double mid = std::sqrt(lo * hi);
        (load(mid) > cfg.jump_budget ? lo : hi) = mid;
      }
      eps_inf = hi;
    }
  }
  m.eps = eps_inf;

  double kappa = triplet.gamma;
  for (const auto& leaf : jumpy) {
    const double e = has_finite_mass(leaf) ? cfg.eps_cutoff.value_or(0.0) : eps_inf;
    const double rate = vol * mass_beyond(leaf, e, cfg.quadrature);
    if (rate > 0.0) m.poisson.push_back({rate, jump_sampler(leaf, e)});
    m.expected += rate;
    if (e > 0.0) m.small_var += small_moment(leaf, 2.0, e, cfg.quadrature).value;
    kappa += compensation(leaf, e);
  }

  const double gauss_coeff = triplet.sigma2 + m.small_var;
  if (gauss_coeff > 0.0) {
    const Extended l2 = m.target.integral([](double x) { return x * x; }, power_growth(2.0, 2.0));
    if (!l2.is_finite()) throw PreconditionViolated("f is not square integrable: " + l2.divergence);
    m.gauss_sd = std::sqrt(gauss_coeff * l2.value);
    m.small_var *= l2.value;
  }
  if (kappa != 0.0) {
    const Extended l1 = m.target.integral([](double x) { return std::abs(x); }, power_growth(1.0, 1.0));
    if (!l1.is_finite()) throw PreconditionViolated("drift compensation needs f in L^1: " + l1.divergence);
    m.drift = kappa * m.target.integral([](double x) { return x; }, power_growth(1.0, 1.0)).value;
  }
}

PairingSampler::~PairingSampler() = default;
PairingSampler::PairingSampler(PairingSampler&&) noexcept = default;
PairingSampler& PairingSampler::operator=(PairingSampler&&) noexcept = default;

double PairingSampler::draw(RngStream& rng, std::uint32_t* large_jumps) const {
  const Impl& m = *impl_;
  double v = m.drift;
  if (m.gauss_sd > 0.0) v += m.gauss_sd * rng.normal();
  for (const auto& s : m.stable) v += s.scale * standard_sas(s.alpha, rng);
  std::uint64_t count = 0;
  if (!m.poisson.empty()) {
    const Box& w = *m.target.window;
    const std::size_t d = w.dimension();
    std::vector<double> t(d);
    for (const auto& p : m.poisson) {
      const std::uint64_t k = rng.poisson(p.rate);
      count += k;
      for (std::uint64_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d; ++j) t[j] = rng.uniform(w.lo[j], w.hi[j]);
        const double x = p.jump(rng);
        v += x * m.target.value(t);
      }
    }
  }
  if (large_jumps) *large_jumps = static_cast<std::uint32_t>(std::min<std::uint64_t>(count, UINT32_MAX));
  return v;
}

double PairingSampler::eps_cutoff() const { return impl_->eps; }
double PairingSampler::small_jump_variance() const { return impl_->small_var; }
double PairingSampler::expected_jumps() const { return impl_->expected; }
const PairingTarget& PairingSampler::target() const { return impl_->target; }

SampleBatch sample_target(const LevyTriplet& triplet, const PairingTarget& target, std::size_t n,
                          const RngStream& rng, const SamplerConfig& cfg) {
  const PairingSampler sampler(triplet, target, n, cfg);
  SampleBatch b;
  b.n = n;
  b.seed = rng.seed();
  b.stream_id = rng.stream_id();
  b.values.resize(n);
  b.large_jumps.resize(n);
  b.small_jump_variance = sampler.small_jump_variance();
  b.eps_cutoff = sampler.eps_cutoff();
  detail::parallel_chunks(n, cfg.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RngStream r = rng.substream(i);
      b.values[i] = sampler.draw(r, &b.large_jumps[i]);
    }
  });
  for (double v : b.values)
    if (!std::isfinite(v)) throw Error("non-finite draw; the test function is not in the domain of the noise");
  return b;
}

SampleBatch sample_pairing(const LevyTriplet& triplet, const TestFunction& f, std::size_t n, const RngStream& rng,
                           const SamplerConfig& cfg) {
  return sample_target(triplet, make_target(triplet, f, cfg), n, rng, cfg);
}

double standard_sas(double alpha, RngStream& rng) {
  const double v = std::numbers::pi * (rng.uniform() - 0.5);
  if (alpha == 1.0) return std::tan(v);
  const double w = rng.exponential();
  return std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
         std::pow(std::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
}

ComplexValue analytic_cf(const LevyTriplet& triplet, const PairingTarget& target, double xi,
                         const QuadratureConfig& cfg) {
  validate(triplet);
  if (xi == 0.0) return 1.0;
  const GrowthProfile sym = RREvaluator(symmetrize(triplet), 0.0, cfg).growth();
  const Extended re = target.integral(
      [&](double x) { return x == 0.0 ? 0.0 : -levy_exponent(triplet, xi * x, cfg).real(); }, sym);
  if (!re.is_finite()) throw QuadratureDivergence("integral of Re psi(xi f) diverges: " + re.divergence);
  double im = 0.0;
  if (!is_symmetric(triplet)) {
    GrowthProfile g;
    if (large_moment(triplet.nu, 1.0, 1.0, cfg).is_finite()) g = power_growth(1.0, 1.0);
    const Extended e = target.integral(
        [&](double x) { return x == 0.0 ? 0.0 : levy_exponent(triplet, xi * x, cfg).imag(); }, g);
    im = e.value;
  }
  return std::exp(ComplexValue(-re.value, im));
}

ComplexValue analytic_cf(const LevyTriplet& triplet, const TestFunction& f, double xi, const QuadratureConfig& cfg) {
  if (const auto* ind = std::get_if<Indicator>(&f.shape())) {
    const double vol = std::visit([](const auto& s) { return s.volume(); }, ind->set) *
                       std::pow(std::abs(f.dilation()), -static_cast<double>(f.dimension()));
    return indicator_cf(triplet, vol, xi * f.amplitude() * ind->value, cfg);
  }
  PairingTarget t;
  t.dimension = f.dimension();
  t.integral = [&](const std::function<double(double)>& h, const GrowthProfile& g) {
    return integrate_composition(f, h, g, cfg);
  };
  return analytic_cf(triplet, t, xi, cfg);
}

ComplexValue indicator_cf(const LevyTriplet& triplet, double volume, double xi, const QuadratureConfig& cfg) {
  if (!(volume >= 0.0)) throw InvalidArgument("volume must be nonnegative");
  if (xi == 0.0 || volume == 0.0) return 1.0;
  return std::exp(volume * levy_exponent(triplet, xi, cfg));
}

EmpiricalCF empirical_cf(std::span<const double> values, const std::vector<double>& xi) {
  if (values.empty()) throw InvalidArgument("empirical CF needs a nonempty batch");
  EmpiricalCF out;
  out.xi = xi;
  out.n = values.size();
  out.values.reserve(xi.size());
  const double n = static_cast<double>(values.size());
  for (double x : xi) {
    double c = 0.0;
    double s = 0.0;
    for (double v : values) {
      c += std::cos(x * v);
      s += std::sin(x * v);
    }
    out.values.emplace_back(c / n, s / n);
  }
  return out;
}

EmpiricalCF empirical_cf(const SampleBatch& batch, const std::vector<double>& xi) {
  return empirical_cf(std::span<const double>(batch.values), xi);
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  g.back() = hi;
  return g;
}

double sup_gap(const EmpiricalCF& emp, const std::vector<ComplexValue>& exact) {
  if (exact.size() != emp.values.size()) throw InvalidArgument("grid sizes differ");
  double m = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) m = std::max(m, std::abs(emp.values[i] - exact[i]));
  return m;
}

MollifierSequence mollified_cf_limit(const LevyTriplet& triplet, const Box& a, const TestFunction& phi,
                                     std::size_t n_max, double xi, const QuadratureConfig& cfg) {
  validate(triplet);
  const std::size_t d = a.dimension();
  if (d == 0 || phi.dimension() != d) throw InvalidArgument("set and phi must share the dimension");
  if (n_max == 0) throw InvalidArgument("n_max must be positive");
  auto exponent_over = [&](const Box& box, const std::vector<std::vector<double>>& breaks,
                           const std::function<double(std::span<const double>)>& f) {
    auto re = [&](std::span<const double> t) { return levy_exponent(triplet, xi * f(t), cfg).real(); };
    auto im = [&](std::span<const double> t) { return levy_exponent(triplet, xi * f(t), cfg).imag(); };
    const double r = integrate_over_box(re, box, breaks, cfg);
    const double i = is_symmetric(triplet) ? 0.0 : integrate_over_box(im, box, breaks, cfg);
    return ComplexValue(r, i);
  };

  MollifierSequence out;
  out.limit = std::exp(exponent_over(a, {}, [&](std::span<const double> t) { return phi(t); }));
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double w = 1.0 / static_cast<double>(n);
    Box support = a;
    std::vector<std::vector<double>> breaks(d);
    for (std::size_t i = 0; i < d; ++i) {
      support.lo[i] -= w;
      support.hi[i] += w;
      breaks[i] = {a.lo[i] + w, a.hi[i] - w};
    }
    const TestFunction m = MollifiedIndicator{a, static_cast<double>(n)};
    const ComplexValue v =
        std::exp(exponent_over(support, breaks, [&](std::span<const double> t) { return phi(t) * m(t); }));
    out.values.push_back(v);
    out.gaps.push_back(std::abs(v - out.limit));
  }
  return out;
}

}  // namespace levywn
