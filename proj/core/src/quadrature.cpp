#include "levywn/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "format.hpp"
#include "levywn/errors.hpp"

namespace levywn {
namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

void check(const QuadratureResult& r, const QuadratureConfig& cfg, double a, double b) {
  const double allowed = std::max(cfg.abs_tol, 1e2 * cfg.rel_tol * r.l1);
  if (!std::isfinite(r.value) || r.error > allowed) {
    throw QuadratureDivergence("quadrature on [" + detail::format_number(a) + ", " + detail::format_number(b) +
                               "] reached error " + detail::format_number(r.error) + " (allowed " +
                               detail::format_number(allowed) + ")");
  }
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
  QuadratureResult r;
  if (a == b) return r;
  if (std::isfinite(a) && std::isfinite(b)) {
    // The error estimate degrades on very narrow intervals; work on [0, 1].
    const double w = b - a;
    auto g = [&](double u) { return f(a + w * u) * w; };
    r.value = GK::integrate(g, 0.0, 1.0, cfg.max_depth, cfg.rel_tol, &r.error, &r.l1);
    r.l1 = std::abs(r.l1);
    r.error = std::abs(r.error);
  } else {
    r.value = GK::integrate(f, a, b, cfg.max_depth, cfg.rel_tol, &r.error, &r.l1);
  }
  check(r, cfg, a, b);
  return r;
}

QuadratureResult integrate_pieces(const Integrand& f, const std::vector<double>& points,
                                  const QuadratureConfig& cfg) {
  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto r = integrate(f, points[i], points[i + 1], cfg);
    total.value += r.value;
    total.error += r.error;
    total.l1 += r.l1;
  }
  return total;
}

QuadratureResult integrate_log(const Integrand& f, double lo, double hi, const QuadratureConfig& cfg,
                               const std::vector<double>& breaks) {
  if (!(lo > 0.0) || !(hi >= lo)) throw InvalidArgument("integrate_log requires 0 < lo <= hi");
  if (lo == hi) return {};
  std::vector<double> pts{std::log(lo)};
  std::vector<double> sorted = breaks;
  std::sort(sorted.begin(), sorted.end());
  for (double b : sorted) {
    if (b > lo && b < hi) pts.push_back(std::log(b));
  }
  pts.push_back(std::log(hi));
  auto g = [&f](double s) {
    const double x = std::exp(s);
    return f(x) * x;
  };
  return integrate_pieces(g, pts, cfg);
}

double integrate_from_origin(const Integrand& f, double hi, double k, const QuadratureConfig& cfg,
                             const std::vector<double>& breaks, double depth) {
  if (!(k > -1.0)) throw InvalidArgument("integrate_from_origin requires k > -1");
  if (!(hi > 0.0)) return 0.0;
  const double x0 = hi * depth;
  const double body = integrate_log(f, x0, hi, cfg, breaks).value;
  return body + f(x0) * x0 / (k + 1.0);
}

double integrate_to_infinity(const Integrand& f, double lo, double k, const QuadratureConfig& cfg,
                             const std::vector<double>& breaks, double reach) {
  if (!(k < -1.0)) throw InvalidArgument("integrate_to_infinity requires k < -1");
  const double x1 = lo * reach;
  const double body = integrate_log(f, lo, x1, cfg, breaks).value;
  return body - f(x1) * x1 / (k + 1.0);
}

double integrate_oscillatory(const Integrand& w, double a, double end, double omega, Trig trig,
                             const QuadratureConfig& cfg) {
  if (!(omega > 0.0)) throw InvalidArgument("integrate_oscillatory requires omega > 0");
  if (end <= a) return 0.0;
  const double half = std::numbers::pi / omega;
  const double shift = trig == Trig::Cos ? 0.5 : 0.0;
  auto zero = [&](long long k) { return (static_cast<double>(k) + shift) * half; };
  long long k = static_cast<long long>(std::floor(a / half - shift)) + 1;
  while (zero(k) <= a) ++k;

  auto integrand = [&](double x) {
    return w(x) * (trig == Trig::Cos ? std::cos(omega * x) : std::sin(omega * x));
  };
  QuadratureConfig piece_cfg = cfg;
  piece_cfg.max_depth = std::min(cfg.max_depth, 12u);

  constexpr std::size_t kAverages = 10;
  std::vector<double> partial;
  double sum = 0.0;
  double mass = 0.0;
  double previous = std::numeric_limits<double>::quiet_NaN();
  double x = a;
  int stable_rounds = 0;
  for (unsigned n = 0; n < cfg.max_half_periods; ++n, ++k) {
    const double next = zero(k);
    if (next >= end) {
      return sum + integrate(integrand, x, end, piece_cfg).value;
    }
    const auto r = integrate(integrand, x, next, piece_cfg);
    sum += r.value;
    mass += r.l1;
    partial.push_back(sum);
    x = next;
    if (partial.size() > kAverages + 1) {
      std::vector<double> e(partial.end() - static_cast<long>(kAverages + 1), partial.end());
      for (std::size_t level = 0; level < kAverages; ++level) {
        for (std::size_t i = 0; i + 1 < e.size() - level; ++i) e[i] = 0.5 * (e[i] + e[i + 1]);
      }
      const double estimate = e[0];
      const double tol = cfg.rel_tol * std::max(std::abs(estimate), 1e-3 * mass) + cfg.abs_tol;
      if (std::abs(estimate - previous) <= tol) {
        if (++stable_rounds >= 2) return estimate;
      } else {
        stable_rounds = 0;
      }
      previous = estimate;
    }
  }
  throw QuadratureDivergence("oscillatory integral did not settle within " +
                             std::to_string(cfg.max_half_periods) + " half-periods");
}

}  // namespace levywn
