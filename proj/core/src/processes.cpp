#include "levywn/processes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "format.hpp"
#include "levywn/errors.hpp"
#include "levywn/levy_measure.hpp"
#include "levywn/phi_function.hpp"
#include "parallel.hpp"

namespace levywn {
namespace {

void check_axis(const std::vector<double>& axis, bool nonnegative) {
  if (axis.empty()) throw InvalidArgument("grid axes must be nonempty");
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i])) throw InvalidArgument("grid points must be finite");
    if (nonnegative && axis[i] < 0.0) throw InvalidArgument("sheet grid points must be nonnegative");
    if (i > 0 && !(axis[i] > axis[i - 1])) throw InvalidArgument("grid axes must be strictly increasing");
  }
}

std::size_t product_of_sizes(const std::vector<std::vector<double>>& grid) {
  std::size_t n = 1;
  for (const auto& a : grid) n *= a.size();
  return n;
}

}  // namespace

LevySheetSampler::LevySheetSampler(const LevyTriplet& triplet, std::vector<std::vector<double>> grid,
                                   std::size_t paths, const SamplerConfig& cfg)
    : grid_(std::move(grid)) {
  validate(triplet);
  if (grid_.empty()) throw InvalidArgument("sheet grid needs at least one axis");
  for (const auto& a : grid_) check_axis(a, true);
  const std::size_t d = grid_.size();
  const std::size_t cells = product_of_sizes(grid_);
  cells_.reserve(cells);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t rem = c;
    for (std::size_t k = d; k-- > 0;) {
      idx[k] = rem % grid_[k].size();
      rem /= grid_[k].size();
    }
    Box cell;
    for (std::size_t k = 0; k < d; ++k) {
      cell.lo.push_back(idx[k] == 0 ? 0.0 : grid_[k][idx[k] - 1]);
      cell.hi.push_back(grid_[k][idx[k]]);
    }
    bool empty = false;
    for (std::size_t k = 0; k < d; ++k) empty = empty || !(cell.hi[k] > cell.lo[k]);
    if (empty) {
      cells_.emplace_back(std::nullopt);
    } else {
      cells_.emplace_back(std::in_place, triplet, make_target(triplet, TestFunction(Indicator{cell}), cfg), paths, cfg);
    }
  }
}

ProcessPath LevySheetSampler::draw(const RngStream& rng) const {
  ProcessPath p;
  p.grid = grid_;
  p.kind = PathKind::Sheet;
  p.seed = rng.seed();
  p.stream_id = rng.stream_id();
  p.values.resize(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    RngStream r = rng.substream(c);
    p.values[c] = cells_[c] ? cells_[c]->draw(r) : 0.0;
  }
  // Partial sums along each axis turn cell increments into X_t.
  std::size_t stride = 1;
  for (std::size_t k = grid_.size(); k-- > 0;) {
    const std::size_t len = grid_[k].size();
    const std::size_t block = stride * len;
    for (std::size_t base = 0; base < p.values.size(); base += block)
      for (std::size_t off = 0; off < stride; ++off)
        for (std::size_t i = 1; i < len; ++i) p.values[base + off + i * stride] += p.values[base + off + (i - 1) * stride];
    stride = block;
  }
  return p;
}

ProcessPath sample_levy_sheet(const LevyTriplet& triplet, const std::vector<std::vector<double>>& grid,
                              const RngStream& rng, const SamplerConfig& cfg) {
  return LevySheetSampler(triplet, grid, 1, cfg).draw(rng);
}

std::vector<ProcessPath> sample_levy_sheets(const LevyTriplet& triplet, const std::vector<std::vector<double>>& grid,
                                            std::size_t paths, const RngStream& rng, const SamplerConfig& cfg) {
  const LevySheetSampler s(triplet, grid, paths, cfg);
  std::vector<ProcessPath> out(paths);
  detail::parallel_chunks(paths, cfg.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) out[k] = s.draw(rng.substream(k));
  });
  return out;
}

PairingTarget ou_innovation_target(double theta, double width, const QuadratureConfig& cfg) {
  if (!(theta > 0.0) || !(width > 0.0) || !std::isfinite(width))
    throw InvalidArgument("OU innovation needs theta > 0 and a finite positive width");
  PairingTarget t;
  t.dimension = 1;
  t.value = [theta, width](std::span<const double> u) {
    return u[0] >= 0.0 && u[0] < width ? std::exp(-theta * u[0]) : 0.0;
  };
  t.window = Box{{0.0}, {width}};
  t.integral = [theta, width, cfg](const std::function<double(double)>& h, const GrowthProfile&) {
    return Extended::finite(integrate([&](double u) { return h(std::exp(-theta * u)); }, 0.0, width, cfg).value);
  };
  return t;
}

OUSampler::OUSampler(const LevyTriplet& triplet, double theta, std::vector<double> grid, std::size_t paths,
                     const SamplerConfig& cfg)
    : theta_(theta), grid_(std::move(grid)) {
  validate(triplet);
  if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidArgument("OU needs theta > 0");
  check_axis(grid_, false);
  const TestFunction kernel = OUKernel{theta};
  const MembershipVerdict v = is_member(triplet, 0.0, kernel, cfg.quadrature);
  if (v.status == MembershipStatus::NotMember)
    throw PreconditionViolated("OU kernel is outside the domain of the noise: " + v.reason);
  samplers_.emplace_back(triplet, make_target(triplet, kernel, cfg), paths, cfg);
  std::map<double, std::size_t> seen;
  for (std::size_t k = 1; k < grid_.size(); ++k) {
    const double w = grid_[k] - grid_[k - 1];
    auto it = seen.find(w);
    if (it == seen.end()) {
      samplers_.emplace_back(triplet, ou_innovation_target(theta, w, cfg.quadrature), paths, cfg);
      it = seen.emplace(w, samplers_.size() - 1).first;
    }
    steps_.push_back(it->second);
  }
}

ProcessPath OUSampler::draw(const RngStream& rng) const {
  ProcessPath p;
  p.grid = {grid_};
  p.kind = PathKind::OU;
  p.seed = rng.seed();
  p.stream_id = rng.stream_id();
  p.values.resize(grid_.size());
  RngStream r0 = rng.substream(0);
  p.values[0] = samplers_[0].draw(r0);
  for (std::size_t k = 1; k < grid_.size(); ++k) {
    RngStream r = rng.substream(k);
    const double decay = std::exp(-theta_ * (grid_[k] - grid_[k - 1]));
    p.values[k] = decay * p.values[k - 1] + samplers_[steps_[k - 1]].draw(r);
  }
  return p;
}

ProcessPath sample_ou(const LevyTriplet& triplet, double theta, const std::vector<double>& grid, const RngStream& rng,
                      const SamplerConfig& cfg) {
  return OUSampler(triplet, theta, grid, 1, cfg).draw(rng);
}

std::vector<ProcessPath> sample_ou_paths(const LevyTriplet& triplet, double theta, const std::vector<double>& grid,
                                         std::size_t paths, const RngStream& rng, const SamplerConfig& cfg) {
  const OUSampler s(triplet, theta, grid, paths, cfg);
  std::vector<ProcessPath> out(paths);
  detail::parallel_chunks(paths, cfg.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t k = b; k < e; ++k) out[k] = s.draw(rng.substream(k));
  });
  return out;
}

KernelOperator ou_operator(double theta) {
  if (!(theta > 0.0)) throw InvalidArgument("OU operator needs theta > 0");
  return {TestFunction(OUKernel{theta}), {theta, 1.0}, "D+" + detail::format_number(theta) + "I", std::nullopt};
}

double apply_left_inverse(const KernelOperator& op, const TestFunction& phi, double t, const QuadratureConfig& cfg) {
  const auto box = phi.support_box();
  if (!box) throw InvalidArgument("left inverse needs a test function with bounded support");
  std::vector<double> pts{box->lo[0]};
  if (t > box->lo[0] && t < box->hi[0]) pts.push_back(t);
  pts.push_back(box->hi[0]);
  auto f = [&](double s) { return op.kernel(s - t) * phi(s); };
  return integrate_pieces(f, pts, cfg).value;
}

double verify_left_inverse(const KernelOperator& op, const std::vector<TestFunction>& phis, double h) {
  if (!(h > 0.0)) throw InvalidArgument("grid step must be positive");
  if (op.whitening.empty() || op.whitening.size() > 3)
    throw InvalidArgument("whitening operator must have order 0, 1 or 2");
  double worst = 0.0;
  for (const auto& phi : phis) {
    if (phi.dimension() != 1) throw InvalidArgument("left-inverse check is one-dimensional");
    const auto box = phi.support_box();
    if (!box) throw InvalidArgument("left-inverse check needs test functions with bounded support");
    const double lo = box->lo[0] - 1.0;
    const long cells = static_cast<long>(std::ceil((box->hi[0] + 1.0 - lo) / h));
    const std::size_t n = static_cast<std::size_t>(cells) + 1;
    std::vector<double> s(n), f(n), lf(n);
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = lo + static_cast<double>(j) * h;
      f[j] = phi(s[j]);
    }
    // L* = Σ (-1)^k c_k D^k.
    for (std::size_t j = 0; j < n; ++j) {
      const double fm = phi(s[j] - h);
      const double fp = phi(s[j] + h);
      double v = op.whitening[0] * f[j];
      if (op.whitening.size() > 1) v -= op.whitening[1] * (fp - fm) / (2.0 * h);
      if (op.whitening.size() > 2) v += op.whitening[2] * (fp - 2.0 * f[j] + fm) / (h * h);
      lf[j] = v;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        const double mid = 0.5 * (s[j] + s[j + 1]);
        acc += op.kernel(mid - s[i]) * 0.5 * (lf[j] + lf[j + 1]);
      }
      worst = std::max(worst, std::abs(h * acc - f[i]));
    }
  }
  return worst;
}

CompatibilityEvidence compatibility_check(const LevyTriplet& triplet, double p0, double pinf, const KernelOperator& op,
                                          const QuadratureConfig& cfg) {
  validate(triplet);
  if (!is_symmetric(triplet) || triplet.sigma2 != 0.0)
    throw PreconditionViolated("compatibility check needs a symmetric triplet without Gaussian part");
  if (!(p0 >= 0.0 && p0 <= 2.0 && pinf >= 0.0 && pinf <= 2.0))
    throw InvalidArgument("exponents must lie in [0, 2]");
  CompatibilityEvidence ev;
  ev.moment = generalized_moment(triplet.nu, pinf, p0, cfg);
  if (!ev.moment.is_finite()) {
    ev.reason = "m_{" + detail::format_number(pinf) + "," + detail::format_number(p0) +
                "}(nu) diverges: " + ev.moment.divergence;
    return ev;
  }

  if (pinf == 0.0) {
    // ρ_{p0,0} = 1 near 0 and T{φ} is nonzero on a half-line: the modular diverges.
    ev.reason = "rho_{" + detail::format_number(p0) + ",0} has no finite modular on nonzero functions";
    return ev;
  }
  const PhiFunction rho = PhiFunction::rho(p0, pinf);
  const TestFunction bump = Bump{1};
  const std::vector<TestFunction> witnesses{bump, bump.dilated(0.5).scaled(3.0), bump.shifted({2.0}).dilated(2.0)};
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol, 1e-10);
  // The bump decays faster than any power at its edges.
  inner.abs_tol = std::max(cfg.abs_tol, 1e-20);
  ev.compatible = true;
  for (const auto& phi : witnesses) {
    const Box box = *phi.support_box();
    auto integrand = [&](double t) { return rho(apply_left_inverse(op, phi, t, inner)); };
    // Windows doubling around the support: geometrically shrinking
    // increments certify a finite modular, non-shrinking ones an infinite
    // one. The largest window keeps exponential tails above underflow.
    std::vector<double> values;
    Extended result = Extended::infinite("modular keeps growing with the window");
    for (double half = 4.0; half <= 256.0 && !result.is_finite(); half *= 2.0) {
      QuadratureConfig outer = inner;
      outer.rel_tol = 1e-8;
      const std::vector<double> pts{box.lo[0] - half, box.lo[0], box.hi[0], box.hi[0] + half};
      values.push_back(integrate_pieces(integrand, pts, outer).value);
      const std::size_t k = values.size();
      if (k < 3) continue;
      const double v = values[k - 1];
      const double delta = std::abs(v - values[k - 2]);
      const double prev_delta = std::abs(values[k - 2] - values[k - 3]);
      const double scale = std::max(v, 1e-300);
      const bool tiny = delta <= 1e-7 * scale;
      const bool geometric = delta <= 0.25 * prev_delta && delta * delta <= 1e-6 * scale * (prev_delta - delta);
      if (tiny || geometric) result = Extended::finite(v);
    }
    if (!result.is_finite()) {
      ev.compatible = false;
      ev.reason = "modular of T{phi} does not converge for witness " + phi.kind_name();
    }
    ev.witness_modulars.push_back(result);
  }
  if (ev.compatible) ev.reason = "moment finite and T maps the witnesses into the space";
  return ev;
}

}  // namespace levywn
