#include "density_view.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "format.hpp"
#include "levywn/errors.hpp"
#include "overloaded.hpp"

namespace levywn::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::optional<TailClass> weaker_tail(const std::optional<TailClass>& a,
                                     const std::optional<TailClass>& b) {
  if (!a || !b) return std::nullopt;
  const auto* pa = std::get_if<PowerLawTail>(&*a);
  const auto* pb = std::get_if<PowerLawTail>(&*b);
  if (pa && pb) return PowerLawTail{std::min(pa->exponent, pb->exponent)};
  if (pa) return a;
  if (pb) return b;
  const auto* ea = std::get_if<ExponentialTail>(&*a);
  const auto* eb = std::get_if<ExponentialTail>(&*b);
  if (ea && eb) return ExponentialTail{std::min(ea->rate, eb->rate)};
  if (ea) return a;
  if (eb) return b;
  return CompactSupport{std::max(std::get<CompactSupport>(*a).radius,
                                 std::get<CompactSupport>(*b).radius)};
}

std::vector<double> with_point(std::vector<double> pts, double x) {
  pts.push_back(x);
  return pts;
}

DensityView jump_view(double lambda, const JumpDistribution& jd) {
  DensityView v;
  v.symmetric = is_symmetric(jd);
  std::visit(Overloaded{
                 [&](const TwoPoint& t) {
                   v.atoms.push_back({t.a, lambda * t.p});
                   v.atoms.push_back({-t.a, lambda * (1.0 - t.p)});
                 },
                 [&](const DiscreteJumps& d) {
                   for (std::size_t i = 0; i < d.values.size(); ++i)
                     v.atoms.push_back({d.values[i], lambda * d.probs[i]});
                 },
                 [&](const GaussianJumps& g) {
                   const double s = std::sqrt(g.variance);
                   v.density = [lambda, g, s](double x) {
                     const double z = (x - g.mean) / s;
                     return lambda * std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::numbers::pi));
                   };
                   v.tail = CompactSupport{std::abs(g.mean) + 40.0 * s};
                   if (g.mean != 0.0) v.breakpoints.push_back(std::abs(g.mean));
                 },
                 [&](const UniformJumps& u) {
                   const double h = lambda / (u.hi - u.lo);
                   v.density = [u, h](double x) { return (x >= u.lo && x <= u.hi) ? h : 0.0; };
                   v.tail = CompactSupport{std::max(std::abs(u.lo), std::abs(u.hi))};
                   v.breakpoints = {std::abs(u.lo), std::abs(u.hi)};
                 },
             },
             jd);
  return v;
}

void merge_into(DensityView& acc, DensityView part) {
  acc.atoms.insert(acc.atoms.end(), part.atoms.begin(), part.atoms.end());
  acc.breakpoints.insert(acc.breakpoints.end(), part.breakpoints.begin(), part.breakpoints.end());
  acc.symmetric = acc.symmetric && part.symmetric;
  if (!part.has_density()) return;
  if (!acc.has_density()) {
    acc.density = std::move(part.density);
    acc.origin_exponent = part.origin_exponent;
    acc.tail = part.tail;
    return;
  }
  auto a = std::move(acc.density);
  auto b = std::move(part.density);
  acc.density = [a, b](double x) { return a(x) + b(x); };
  acc.origin_exponent = std::max(acc.origin_exponent, part.origin_exponent);
  acc.tail = weaker_tail(acc.tail, part.tail);
}

double atom_power(const FiniteDiscrete::Atom& a, double q) {
  return q == 0.0 ? a.mass : a.mass * std::pow(std::abs(a.location), q);
}

// (sin y - y) without cancellation for small y.
double sin_minus_id(double y) {
  if (std::abs(y) < 1e-2) {
    const double y2 = y * y;
    return y * y2 * (-1.0 / 6.0 + y2 * (1.0 / 120.0 - y2 / 5040.0));
  }
  return std::sin(y) - y;
}

double tail_end(const DensityView& v) {
  if (!v.tail) throw Inconclusive("density has no tail classification");
  if (const auto* c = std::get_if<CompactSupport>(&*v.tail)) return c->radius;
  return kInf;
}

}  // namespace

DensityView density_view(const LevyMeasure& nu) {
  return std::visit(
      Overloaded{
          [](const ZeroMeasure&) { return DensityView{}; },
          [](const FiniteDiscrete& d) {
            DensityView v;
            v.atoms = d.atoms;
            v.symmetric = is_symmetric(LevyMeasure(d));
            return v;
          },
          [](const StableTail& s) {
            DensityView v;
            v.density = [s](double x) { return s.c * std::pow(std::abs(x), -1.0 - s.alpha); };
            v.origin_exponent = s.alpha;
            v.tail = PowerLawTail{s.alpha};
            return v;
          },
          [](const GeneralizedLaplace& g) {
            DensityView v;
            const double k = g.rate();
            const double tau = g.tau;
            v.density = [k, tau](double x) {
              const double m = std::abs(x);
              return tau * std::exp(-k * m) / m;
            };
            v.origin_exponent = 0.0;
            v.tail = ExponentialTail{k};
            return v;
          },
          [](const CompoundPoisson& cp) { return jump_view(cp.lambda, cp.jumps); },
          [](const GenericDensity& g) {
            DensityView v;
            v.density = g.density;
            v.origin_exponent = g.origin_exponent;
            v.tail = g.tail;
            v.breakpoints = g.breakpoints;
            v.symmetric = g.symmetric;
            return v;
          },
          [](const MeasureSum& s) {
            DensityView acc;
            for (const auto& t : s.terms) merge_into(acc, density_view(t));
            return acc;
          },
      },
      nu.variant());
}

Extended numeric_small_moment(const DensityView& v, double q, double r, const QuadratureConfig& cfg) {
  double total = 0.0;
  for (const auto& a : v.atoms)
    if (std::abs(a.location) <= r) total += atom_power(a, q);
  if (!v.has_density() || !(r > 0.0)) return Extended::finite(total);
  if (q <= v.origin_exponent) {
    return Extended::infinite("origin divergence: density ~ |x|^{-1-" +
                              detail::format_number(v.origin_exponent) + "} against |x|^" +
                              detail::format_number(q));
  }
  auto g = [&](double x) { return (q == 0.0 ? 1.0 : std::pow(x, q)) * v.even(x); };
  total += integrate_from_origin(g, r, q - 1.0 - v.origin_exponent, cfg, v.breakpoints);
  return Extended::finite(total);
}

Extended numeric_large_moment(const DensityView& v, double p, double r, const QuadratureConfig& cfg) {
  double total = 0.0;
  for (const auto& a : v.atoms)
    if (std::abs(a.location) > r) total += atom_power(a, p);
  if (!v.has_density()) return Extended::finite(total);
  if (!v.tail) throw Inconclusive("density has no tail classification");
  auto g = [&](double x) { return (p == 0.0 ? 1.0 : std::pow(x, p)) * v.even(x); };
  const auto pts = v.breakpoints;
  const double body = std::visit(
      Overloaded{
          [&](const PowerLawTail& t) -> double {
            if (p >= t.exponent) return kInf;
            return integrate_to_infinity(g, r, p - 1.0 - t.exponent, cfg, pts);
          },
          [&](const ExponentialTail& t) -> double {
            const double hi = std::max(r, p / t.rate) + 100.0 / t.rate;
            return integrate_log(g, r, hi, cfg, pts).value;
          },
          [&](const CompactSupport& c) -> double {
            if (r >= c.radius) return 0.0;
            return integrate_log(g, r, c.radius, cfg, pts).value;
          },
      },
      *v.tail);
  if (!std::isfinite(body)) {
    return Extended::infinite("tail divergence: power-law tail against |x|^" + detail::format_number(p));
  }
  return Extended::finite(total + body);
}

double numeric_band_first_moment(const DensityView& v, double lo, double hi,
                                 const QuadratureConfig& cfg) {
  double total = 0.0;
  for (const auto& a : v.atoms) {
    const double m = std::abs(a.location);
    if (m > lo && m <= hi) total += a.mass * a.location;
  }
  if (!v.has_density() || v.symmetric || !(hi > lo)) return total;
  auto g = [&](double x) { return x * v.odd(x); };
  return total + integrate_log(g, lo, hi, cfg, v.breakpoints).value;
}

std::complex<double> numeric_jump_exponent(const DensityView& v, double xi,
                                           const QuadratureConfig& cfg) {
  if (xi == 0.0) return {0.0, 0.0};
  const double w = std::abs(xi);
  double re = 0.0;
  double im = 0.0;
  for (const auto& a : v.atoms) {
    const double y = a.location * w;
    const double s = std::sin(0.5 * y);
    re += -2.0 * a.mass * s * s;
    im += a.mass * (std::abs(a.location) <= 1.0 ? sin_minus_id(y) : std::sin(y));
  }
  if (v.has_density()) {
    DensityView dens = v;
    dens.atoms.clear();
    const double end = tail_end(v);
    const double kink = 1.0 / w;
    auto bps = with_point(v.breakpoints, 1.0);

    auto near_re = [&](double x) {
      const double s = std::sin(0.5 * w * x);
      return -2.0 * s * s * v.even(x);
    };
    re += integrate_from_origin(near_re, std::min(kink, end), 1.0 - v.origin_exponent, cfg, bps);
    if (kink < end) {
      auto even = [&](double x) { return v.even(x); };
      re += integrate_oscillatory(even, kink, end, w, Trig::Cos, cfg);
      re -= numeric_large_moment(dens, 0.0, kink, cfg).value;
    }

    if (!v.symmetric) {
      const double c = std::min({1.0, kink, end});
      auto near_im = [&](double x) { return sin_minus_id(w * x) * v.odd(x); };
      im += integrate_from_origin(near_im, c, 2.0 - v.origin_exponent, cfg, bps);
      auto odd = [&](double x) { return v.odd(x); };
      im += integrate_oscillatory(odd, c, end, w, Trig::Sin, cfg);
      if (kink < 1.0) im -= w * numeric_band_first_moment(dens, kink, std::min(1.0, end), cfg);
    }
  }
  if (xi < 0.0) im = -im;
  return {re, im};
}

}  // namespace levywn::detail
