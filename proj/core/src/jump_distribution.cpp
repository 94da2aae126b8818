#include "levywn/jump_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "levywn/errors.hpp"
#include "levywn/quadrature.hpp"
#include "overloaded.hpp"

namespace levywn {
namespace {

using detail::Overloaded;

constexpr double kInf = std::numeric_limits<double>::infinity();
// exp(-reach²/2) stays a normal double.
constexpr double kGaussianReach = 37.0;

double norm_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }
// P(Z in [a, b]) without cancellation in either tail.
double norm_mass(double a, double b) {
  if (a >= b) return 0.0;
  if (a >= 0.0) return 0.5 * (std::erfc(a / std::numbers::sqrt2) - std::erfc(b / std::numbers::sqrt2));
  if (b <= 0.0) return 0.5 * (std::erfc(-b / std::numbers::sqrt2) - std::erfc(-a / std::numbers::sqrt2));
  return 1.0 - 0.5 * std::erfc(-a / std::numbers::sqrt2) - 0.5 * std::erfc(b / std::numbers::sqrt2);
}

// ∫_u^v |x|^q dx.
double abs_power_integral(double u, double v, double q) {
  if (u >= v) return 0.0;
  auto prim = [q](double x) {
    const double m = std::abs(x);
    const double val = q == 0.0 ? m : std::pow(m, q + 1.0) / (q + 1.0);
    return x < 0.0 ? -val : val;
  };
  return prim(v) - prim(u);
}

// ∫_{[lo,hi]} |x|^q N(mean, var)(dx) by quadrature, split at the origin.
double gaussian_power_integral(const GaussianJumps& g, double q, double lo, double hi) {
  const double s = std::sqrt(g.variance);
  lo = std::max(lo, g.mean - kGaussianReach * s);
  hi = std::min(hi, g.mean + kGaussianReach * s);
  if (lo >= hi) return 0.0;
  auto f = [&](double x) { return std::pow(std::abs(x), q) * norm_pdf((x - g.mean) / s) / s; };
  std::vector<double> pts{lo};
  if (lo < 0.0 && hi > 0.0) pts.push_back(0.0);
  if (g.mean > lo && g.mean < hi && g.mean != 0.0) pts.push_back(g.mean);
  // Geometric breaks resolve |x|^q and endpoints close to the origin.
  for (double m = s; m > 1e-14 * s; m *= 0.1)
    for (double x : {-m, m})
      if (x > lo && x < hi) pts.push_back(x);
  // Tail breaks bound the dynamic range of the density on each piece.
  for (double k = 2.0; k < kGaussianReach; k *= 2.0)
    for (double x : {g.mean - k * s, g.mean + k * s})
      if (x > lo && x < hi) pts.push_back(x);
  std::sort(pts.begin(), pts.end());
  pts.push_back(hi);
  // Pieces nearest the mean first, so far-tail pieces are judged against the bulk.
  std::vector<std::size_t> order(pts.size() - 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto gap = [&](std::size_t i) { return std::max({0.0, pts[i] - g.mean, g.mean - pts[i + 1]}); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return gap(i) < gap(j); });
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  double acc = 0.0;
  for (std::size_t i : order) {
    cfg.abs_tol = std::max(cfg.abs_tol, 1e-17 * acc);
    const double a = pts[i];
    const double b = pts[i + 1];
    const double w = b - a;
    // Innermost piece at the origin: the density is constant to O(w).
    if ((a == 0.0 || b == 0.0) && w <= 1e-12 * s) {
      acc += norm_pdf(-g.mean / s) / s * std::pow(w, q + 1.0) / (q + 1.0);
      continue;
    }
    acc += integrate(f, a, b, cfg).value;
  }
  return acc;
}

double gaussian_second_moment(const GaussianJumps& g, double r) {
  const double s = std::sqrt(g.variance);
  // The closed form loses all digits to cancellation once r << s.
  if (r < s) return gaussian_power_integral(g, 2.0, -r, r);
  const double a = (-r - g.mean) / s;
  const double b = (r - g.mean) / s;
  const double mass = norm_mass(a, b);
  return g.mean * g.mean * mass + 2.0 * g.mean * s * (norm_pdf(a) - norm_pdf(b)) +
         g.variance * (mass + a * norm_pdf(a) - b * norm_pdf(b));
}

}  // namespace

void validate(const JumpDistribution& d) {
  std::visit(Overloaded{
                 [](const TwoPoint& t) {
                   if (!(t.a != 0.0) || !std::isfinite(t.a))
                     throw InvalidArgument("TwoPoint amplitude must be finite and nonzero");
                   if (!(t.p >= 0.0 && t.p <= 1.0))
                     throw InvalidArgument("TwoPoint probability must lie in [0, 1]");
                 },
                 [](const GaussianJumps& g) {
                   if (!std::isfinite(g.mean) || !(g.variance > 0.0) || !std::isfinite(g.variance))
                     throw InvalidArgument("Gaussian jumps need finite mean and positive variance");
                 },
                 [](const UniformJumps& u) {
                   if (!(u.lo < u.hi) || !std::isfinite(u.lo) || !std::isfinite(u.hi))
                     throw InvalidArgument("Uniform jumps need finite lo < hi");
                 },
                 [](const DiscreteJumps& dj) {
                   if (dj.values.empty() || dj.values.size() != dj.probs.size())
                     throw InvalidArgument("Discrete jumps need matching nonempty values and probs");
                   double total = 0.0;
                   for (std::size_t i = 0; i < dj.values.size(); ++i) {
                     if (!std::isfinite(dj.values[i]) || dj.values[i] == 0.0)
                       throw InvalidArgument("Discrete jump values must be finite and nonzero");
                     if (!(dj.probs[i] >= 0.0)) throw InvalidArgument("Discrete probs must be >= 0");
                     total += dj.probs[i];
                   }
                   if (std::abs(total - 1.0) > 1e-12)
                     throw InvalidArgument("Discrete probs must sum to 1");
                 },
             },
             d);
}

bool is_symmetric(const JumpDistribution& d) {
  return std::visit(
      Overloaded{
          [](const TwoPoint& t) { return t.p == 0.5; },
          [](const GaussianJumps& g) { return g.mean == 0.0; },
          [](const UniformJumps& u) { return u.lo == -u.hi; },
          [](const DiscreteJumps& dj) {
            for (std::size_t i = 0; i < dj.values.size(); ++i) {
              double mirrored = 0.0;
              for (std::size_t j = 0; j < dj.values.size(); ++j) {
                if (dj.values[j] == -dj.values[i]) mirrored += dj.probs[j];
              }
              double same = 0.0;
              for (std::size_t j = 0; j < dj.values.size(); ++j) {
                if (dj.values[j] == dj.values[i]) same += dj.probs[j];
              }
              if (std::abs(mirrored - same) > 1e-15) return false;
            }
            return true;
          },
      },
      d);
}

std::complex<double> characteristic_function(const JumpDistribution& d, double xi) {
  using C = std::complex<double>;
  return std::visit(
      Overloaded{
          [xi](const TwoPoint& t) {
            return C(std::cos(t.a * xi), (2.0 * t.p - 1.0) * std::sin(t.a * xi));
          },
          [xi](const GaussianJumps& g) {
            return std::exp(C(-0.5 * g.variance * xi * xi, g.mean * xi));
          },
          [xi](const UniformJumps& u) {
            const double half = 0.5 * (u.hi - u.lo) * xi;
            const double sinc = half == 0.0 ? 1.0 : std::sin(half) / half;
            return std::polar(sinc, 0.5 * (u.lo + u.hi) * xi);
          },
          [xi](const DiscreteJumps& dj) {
            C acc(0.0, 0.0);
            for (std::size_t i = 0; i < dj.values.size(); ++i) {
              acc += dj.probs[i] * C(std::cos(dj.values[i] * xi), std::sin(dj.values[i] * xi));
            }
            return acc;
          },
      },
      d);
}

double prob_beyond(const JumpDistribution& d, double r) {
  return std::visit(Overloaded{
                        [r](const TwoPoint& t) { return std::abs(t.a) > r ? 1.0 : 0.0; },
                        [r](const GaussianJumps& g) {
                          const double s = std::sqrt(g.variance);
                          return 1.0 - norm_mass((-r - g.mean) / s, (r - g.mean) / s);
                        },
                        [r](const UniformJumps& u) {
                          const double inside =
                              std::max(0.0, std::min(u.hi, r) - std::max(u.lo, -r));
                          return 1.0 - inside / (u.hi - u.lo);
                        },
                        [r](const DiscreteJumps& dj) {
                          double acc = 0.0;
                          for (std::size_t i = 0; i < dj.values.size(); ++i)
                            if (std::abs(dj.values[i]) > r) acc += dj.probs[i];
                          return acc;
                        },
                    },
                    d);
}

double small_moment(const JumpDistribution& d, double q, double r) {
  auto atom = [q](double x) { return q == 0.0 ? 1.0 : std::pow(std::abs(x), q); };
  return std::visit(Overloaded{
                        [&](const TwoPoint& t) { return std::abs(t.a) <= r ? atom(t.a) : 0.0; },
                        [&](const GaussianJumps& g) {
                          if (q == 2.0) return gaussian_second_moment(g, r);
                          if (q == 0.0) return 1.0 - prob_beyond(d, r);
                          return gaussian_power_integral(g, q, -r, r);
                        },
                        [&](const UniformJumps& u) {
                          return abs_power_integral(std::max(u.lo, -r), std::min(u.hi, r), q) /
                                 (u.hi - u.lo);
                        },
                        [&](const DiscreteJumps& dj) {
                          double acc = 0.0;
                          for (std::size_t i = 0; i < dj.values.size(); ++i)
                            if (std::abs(dj.values[i]) <= r) acc += dj.probs[i] * atom(dj.values[i]);
                          return acc;
                        },
                    },
                    d);
}

double large_moment(const JumpDistribution& d, double p, double r) {
  auto atom = [p](double x) { return p == 0.0 ? 1.0 : std::pow(std::abs(x), p); };
  return std::visit(
      Overloaded{
          [&](const TwoPoint& t) { return std::abs(t.a) > r ? atom(t.a) : 0.0; },
          [&](const GaussianJumps& g) {
            if (p == 0.0) return prob_beyond(d, r);
            return gaussian_power_integral(g, p, -kInf, -r) + gaussian_power_integral(g, p, r, kInf);
          },
          [&](const UniformJumps& u) {
            return (abs_power_integral(u.lo, std::min(u.hi, -r), p) +
                    abs_power_integral(std::max(u.lo, r), u.hi, p)) /
                   (u.hi - u.lo);
          },
          [&](const DiscreteJumps& dj) {
            double acc = 0.0;
            for (std::size_t i = 0; i < dj.values.size(); ++i)
              if (std::abs(dj.values[i]) > r) acc += dj.probs[i] * atom(dj.values[i]);
            return acc;
          },
      },
      d);
}

double truncated_mean(const JumpDistribution& d, double r) {
  return std::visit(
      Overloaded{
          [r](const TwoPoint& t) { return std::abs(t.a) <= r ? (2.0 * t.p - 1.0) * t.a : 0.0; },
          [r](const GaussianJumps& g) {
            const double s = std::sqrt(g.variance);
            if (r < s) {
              QuadratureConfig cfg;
              cfg.rel_tol = 1e-12;
              auto f = [&](double x) { return x * norm_pdf((x - g.mean) / s) / s; };
              return integrate_pieces(f, {-r, 0.0, r}, cfg).value;
            }
            const double a = (-r - g.mean) / s;
            const double b = (r - g.mean) / s;
            return g.mean * norm_mass(a, b) + s * (norm_pdf(a) - norm_pdf(b));
          },
          [r](const UniformJumps& u) {
            const double a = std::max(u.lo, -r);
            const double b = std::min(u.hi, r);
            if (a >= b) return 0.0;
            return 0.5 * (b * b - a * a) / (u.hi - u.lo);
          },
          [r](const DiscreteJumps& dj) {
            double acc = 0.0;
            for (std::size_t i = 0; i < dj.values.size(); ++i)
              if (std::abs(dj.values[i]) <= r) acc += dj.probs[i] * dj.values[i];
            return acc;
          },
      },
      d);
}

JumpDistribution scaled(const JumpDistribution& d, double a) {
  if (a == 0.0) throw InvalidArgument("jump distributions can only be scaled by a nonzero factor");
  return std::visit(Overloaded{
                        [a](const TwoPoint& t) -> JumpDistribution {
                          return TwoPoint{t.a * a, t.p};
                        },
                        [a](const GaussianJumps& g) -> JumpDistribution {
                          return GaussianJumps{g.mean * a, g.variance * a * a};
                        },
                        [a](const UniformJumps& u) -> JumpDistribution {
                          return a > 0 ? UniformJumps{u.lo * a, u.hi * a}
                                       : UniformJumps{u.hi * a, u.lo * a};
                        },
                        [a](const DiscreteJumps& dj) -> JumpDistribution {
                          DiscreteJumps out = dj;
                          for (double& v : out.values) v *= a;
                          return out;
                        },
                    },
                    d);
}

JumpDistribution reflected(const JumpDistribution& d) { return scaled(d, -1.0); }

std::pair<double, double> magnitude_range(const JumpDistribution& d) {
  return std::visit(Overloaded{
                        [](const TwoPoint& t) { return std::pair{std::abs(t.a), std::abs(t.a)}; },
                        [](const GaussianJumps&) { return std::pair{0.0, kInf}; },
                        [](const UniformJumps& u) {
                          const double lo = (u.lo <= 0.0 && u.hi >= 0.0)
                                                ? 0.0
                                                : std::min(std::abs(u.lo), std::abs(u.hi));
                          return std::pair{lo, std::max(std::abs(u.lo), std::abs(u.hi))};
                        },
                        [](const DiscreteJumps& dj) {
                          double lo = kInf, hi = 0.0;
                          for (double v : dj.values) {
                            lo = std::min(lo, std::abs(v));
                            hi = std::max(hi, std::abs(v));
                          }
                          return std::pair{lo, hi};
                        },
                    },
                    d);
}

}  // namespace levywn
