#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levywn/extended.hpp"
#include "levywn/levy_triplet.hpp"
#include "levywn/phi_function.hpp"
#include "levywn/quadrature.hpp"
#include "levywn/rng.hpp"
#include "levywn/test_function.hpp"

namespace levywn {

struct SamplerConfig {
  // Jumps with |x| <= eps are replaced by a matched Gaussian. Unset: 0 for
  // finite measures, otherwise the smallest value keeping the expected number
  // of jumps per batch within `jump_budget`, but not below `eps_floor`.
  std::optional<double> eps_cutoff;
  double jump_budget = 1e8;
  double eps_floor = 1e-6;
  // Relative share of ∫Ψ(f) allowed outside the jump window.
  double truncation_tol = 1e-9;
  // Sample stable components through their exact marginal.
  bool stable_shortcut = true;
  // 0 selects the hardware concurrency.
  unsigned threads = 0;
  QuadratureConfig quadrature;
};

// A real function on ℝ^d as seen by the sampler: pointwise values, a bounded
// window carrying all but a negligible part of it, and exact integrals
// ∫ h(f(t)) dt over ℝ^d for h with h(0) = 0.
struct PairingTarget {
  std::size_t dimension = 1;
  std::function<double(std::span<const double>)> value;
  // Absent when no window reaches the tolerance; `window_error` says why.
  std::optional<Box> window;
  std::string window_error;
  std::function<Extended(const std::function<double(double)>&, const GrowthProfile&)> integral;
};

// Target of a test function; the window is the support box, or for
// power-law and exponential shapes the truncation where the tail of
// ∫Ψ(f) falls below `truncation_tol` of the total.
PairingTarget make_target(const LevyTriplet& triplet, const TestFunction& f, const SamplerConfig& cfg = {});

// Draws of ⟨Ẋ, f⟩ for one target; immutable after construction.
class PairingSampler {
 public:
  // `batch_size` only enters the default choice of the cutoff.
  PairingSampler(const LevyTriplet& triplet, PairingTarget target, std::size_t batch_size,
                 const SamplerConfig& cfg = {});
  ~PairingSampler();
  PairingSampler(PairingSampler&&) noexcept;
  PairingSampler& operator=(PairingSampler&&) noexcept;

  // One draw; `large_jumps` receives the number of simulated jumps.
  double draw(RngStream& rng, std::uint32_t* large_jumps = nullptr) const;

  double eps_cutoff() const;
  // Variance of the Gaussian that replaces the jumps below the cutoff.
  double small_jump_variance() const;
  // Expected number of simulated jumps per draw.
  double expected_jumps() const;
  const PairingTarget& target() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SampleBatch {
  std::vector<double> values;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  std::vector<std::uint32_t> large_jumps;
  double small_jump_variance = 0.0;
  double eps_cutoff = 0.0;
};

// n i.i.d. draws; draw i uses rng.substream(i), so the batch does not depend
// on the thread count.
SampleBatch sample_pairing(const LevyTriplet& triplet, const TestFunction& f, std::size_t n, const RngStream& rng,
                           const SamplerConfig& cfg = {});
SampleBatch sample_target(const LevyTriplet& triplet, const PairingTarget& target, std::size_t n,
                          const RngStream& rng, const SamplerConfig& cfg = {});

// Standard symmetric stable variate with characteristic function e^{-|u|^α}.
double standard_sas(double alpha, RngStream& rng);

// exp(∫ ψ(ξ f(t)) dt).
ComplexValue analytic_cf(const LevyTriplet& triplet, const TestFunction& f, double xi,
                         const QuadratureConfig& cfg = {});
ComplexValue analytic_cf(const LevyTriplet& triplet, const PairingTarget& target, double xi,
                         const QuadratureConfig& cfg = {});
// exp(vol · ψ(ξ)), the pairing with the indicator of a set of volume `vol`.
ComplexValue indicator_cf(const LevyTriplet& triplet, double volume, double xi, const QuadratureConfig& cfg = {});

struct EmpiricalCF {
  std::vector<double> xi;
  std::vector<ComplexValue> values;
  std::size_t n = 0;
};

// Requires a nonempty batch.
EmpiricalCF empirical_cf(std::span<const double> values, const std::vector<double>& xi);
EmpiricalCF empirical_cf(const SampleBatch& batch, const std::vector<double>& xi);

// `count` equally spaced points from lo to hi.
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

// max_k |emp_k − exact_k|.
double sup_gap(const EmpiricalCF& emp, const std::vector<ComplexValue>& exact);

struct MollifierSequence {
  // Index k holds the value for n = k + 1.
  std::vector<ComplexValue> values;
  ComplexValue limit;
  std::vector<double> gaps;
};

// Characteristic functions of ⟨Ẋ, φ·(θ_n * 1_A)⟩ for n = 1..n_max and their
// limit exp(∫_A ψ(ξφ)).
MollifierSequence mollified_cf_limit(const LevyTriplet& triplet, const Box& a, const TestFunction& phi,
                                     std::size_t n_max, double xi, const QuadratureConfig& cfg = {});

}  // namespace levywn
