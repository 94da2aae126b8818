#include "levywn/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "format.hpp"
#include "levywn/errors.hpp"

namespace levywn {
namespace {

// ρ_big = O(ρ_small) on one side, from the asymptotes there. `towards_zero`
// selects which way a larger exponent is smaller.
bool dominated(const Asymptote& big, const Asymptote& small, bool towards_zero) {
  if (big.exponent != small.exponent)
    return towards_zero ? big.exponent > small.exponent : big.exponent < small.exponent;
  return !(big.logarithmic && !small.logarithmic);
}

}  // namespace

Extended modular(const PhiFunction& rho, const TestFunction& f, const QuadratureConfig& cfg) {
  return integrate_composition(
      f, [&rho](double x) { return rho(x); }, rho.growth(), cfg);
}

FNormResult f_norm(const PhiFunction& rho, const TestFunction& f, const FNormConfig& cfg) {
  if (rho.kind() == PhiFunction::Kind::Custom && !rho.delta2_bound())
    throw PreconditionViolated("F-norm needs a Delta2-regular phi-function");
  auto m = [&](double lambda) { return modular(rho, f.scaled(1.0 / lambda), cfg.quadrature); };
  FNormResult out;
  const Extended at_one = m(1.0);
  if (!at_one.is_finite()) throw NoFiniteModular("modular is infinite: " + at_one.divergence);
  if (at_one.value == 0.0) return out;

  // g(λ) = ρ(f/λ) − λ is strictly decreasing; bracket its zero.
  double lo = 1.0;
  double hi = 1.0;
  double m_hi = at_one.value;
  unsigned it = 0;
  if (m_hi > hi) {
    while (m_hi > hi) {
      lo = hi;
      hi *= 2.0;
      m_hi = m(hi).value;
      if (++it > cfg.max_iterations) throw Error("F-norm bracket did not close");
    }
  } else {
    double m_lo = m_hi;
    while (m_lo <= lo) {
      hi = lo;
      m_hi = m_lo;
      lo *= 0.5;
      const Extended e = m(lo);
      if (!e.is_finite()) throw NoFiniteModular("modular is infinite: " + e.divergence);
      m_lo = e.value;
      if (++it > cfg.max_iterations) throw Error("F-norm bracket did not close");
    }
  }
  while (hi - lo > cfg.rel_tol * hi && it < 4 * cfg.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    const double v = m(mid).value;
    if (v <= mid) {
      hi = mid;
      m_hi = v;
    } else {
      lo = mid;
    }
    ++it;
  }
  out.value = hi;
  out.modular_at_value = m_hi;
  out.iterations = it;
  return out;
}

std::vector<double> log_grid(double lo_decade, double hi_decade, std::size_t count) {
  if (count < 2 || !(hi_decade > lo_decade)) throw InvalidArgument("log_grid needs count >= 2 and lo < hi");
  std::vector<double> g;
  g.reserve(count + 2);
  for (std::size_t i = 0; i < count; ++i)
    g.push_back(std::pow(10.0, lo_decade + (hi_decade - lo_decade) * static_cast<double>(i) /
                                                static_cast<double>(count - 1)));
  g.push_back(0.5);
  g.push_back(1.0);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

double delta2_constant(const PhiFunction& rho, const std::vector<double>& grid) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double x : grid) {
    if (x > 0.0) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  if (!(hi >= 1e6 * lo)) throw InvalidArgument("Delta2 grid must span at least 6 decades");
  double best = 0.0;
  for (double x : grid) {
    if (!(x > 0.0)) continue;
    const double base = rho(x);
    if (base > 0.0 && std::isfinite(base)) best = std::max(best, rho(2.0 * x) / base);
  }
  return best;
}

EmbeddingEvidence embedding_holds(const PhiFunction& rho_small, const PhiFunction& rho_big,
                                  const std::vector<double>& grid) {
  std::vector<double> pts;
  for (double x : grid)
    if (x > 0.0 && std::isfinite(x)) pts.push_back(x);
  if (pts.size() < 2) throw InvalidArgument("embedding check needs at least two positive grid points");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  EmbeddingEvidence ev;
  ev.holds = true;
  std::vector<double> ratio(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double s = rho_small(pts[i]);
    const double b = rho_big(pts[i]);
    ratio[i] = b == 0.0 ? 0.0 : (s == 0.0 ? std::numeric_limits<double>::infinity() : b / s);
    if (ratio[i] > ev.constant || i == 0) {
      ev.constant = ratio[i];
      ev.witness = pts[i];
    }
  }
  if (!std::isfinite(ev.constant)) {
    ev.holds = false;
    return ev;
  }

  const GrowthProfile& gs = rho_small.growth();
  const GrowthProfile& gb = rho_big.growth();
  if (gs.at_zero && gs.at_infinity && gb.at_zero && gb.at_infinity) {
    if (!dominated(*gb.at_zero, *gs.at_zero, true)) {
      ev.holds = false;
      ev.witness = pts.front();
    } else if (!dominated(*gb.at_infinity, *gs.at_infinity, false)) {
      ev.holds = false;
      ev.witness = pts.back();
    }
    return ev;
  }

  // Ratio still rising by more than 1% over the last decade at either end.
  auto rising_towards = [&](bool at_front) {
    const double end = at_front ? pts.front() : pts.back();
    const double inner = at_front ? end * 10.0 : end / 10.0;
    auto it = std::lower_bound(pts.begin(), pts.end(), inner);
    if (it == pts.end()) return false;
    const std::size_t j = static_cast<std::size_t>(it - pts.begin());
    const std::size_t e = at_front ? 0 : pts.size() - 1;
    return ratio[e] > 1.01 * ratio[j];
  };
  if (rising_towards(true)) {
    ev.holds = false;
    ev.witness = pts.front();
  } else if (rising_towards(false)) {
    ev.holds = false;
    ev.witness = pts.back();
  }
  return ev;
}

Extended lp0_zero_modular(double p0, const TestFunction& f, const QuadratureConfig& cfg) {
  if (!(p0 >= 0.0) || !std::isfinite(p0)) throw InvalidArgument("L^{p0,0} needs p0 >= 0");
  GrowthProfile g;
  g.at_zero = Asymptote{0.0, false};
  g.at_infinity = Asymptote{p0, false};
  auto h = [p0](double x) {
    const double a = std::abs(x);
    if (a == 0.0) return 0.0;
    return a > 1.0 ? std::pow(a, p0) : 1.0;
  };
  Extended e = integrate_composition(f, h, g, cfg);
  if (!e.is_finite())
    e.divergence = "support of f must have finite measure and |f|^" + detail::format_number(p0) +
                   " must be integrable: " + e.divergence;
  return e;
}

}  // namespace levywn
