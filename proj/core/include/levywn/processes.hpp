#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levywn/domain.hpp"
#include "levywn/extended.hpp"
#include "levywn/levy_triplet.hpp"
#include "levywn/rng.hpp"
#include "levywn/sampler.hpp"
#include "levywn/test_function.hpp"

namespace levywn {

enum class PathKind { Sheet, OU };

struct ProcessPath {
  // One strictly increasing axis per dimension.
  std::vector<std::vector<double>> grid;
  // Row-major over the grid, last axis fastest.
  std::vector<double> values;
  PathKind kind = PathKind::Sheet;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

// X_t = ⟨Ẋ, 1_{[0,t]}⟩ on a rectangular grid of nonnegative points, built from
// independent cell increments; cell 0 along each axis is [0, t_0].
class LevySheetSampler {
 public:
  // `paths` only enters the default choice of the jump cutoff.
  LevySheetSampler(const LevyTriplet& triplet, std::vector<std::vector<double>> grid, std::size_t paths = 1,
                   const SamplerConfig& cfg = {});

  // Cell c of the path uses rng.substream(c).
  ProcessPath draw(const RngStream& rng) const;
  const std::vector<std::vector<double>>& grid() const { return grid_; }

 private:
  std::vector<std::vector<double>> grid_;
  // Empty for cells of zero volume.
  std::vector<std::optional<PairingSampler>> cells_;
};

ProcessPath sample_levy_sheet(const LevyTriplet& triplet, const std::vector<std::vector<double>>& grid,
                              const RngStream& rng, const SamplerConfig& cfg = {});
// Path k uses rng.substream(k).
std::vector<ProcessPath> sample_levy_sheets(const LevyTriplet& triplet, const std::vector<std::vector<double>>& grid,
                                            std::size_t paths, const RngStream& rng, const SamplerConfig& cfg = {});

// Stationary solution of (D + θI)s = Ẋ on a strictly increasing grid through
// the exact recursion s(t') = e^{-θ(t'-t)} s(t) + ⟨Ẋ, e^{-θ(t'-·)} 1_{(t,t']}⟩.
class OUSampler {
 public:
  OUSampler(const LevyTriplet& triplet, double theta, std::vector<double> grid, std::size_t paths = 1,
            const SamplerConfig& cfg = {});

  // Substream 0 draws the stationary start, substream k the k-th innovation.
  ProcessPath draw(const RngStream& rng) const;
  const std::vector<double>& grid() const { return grid_; }

 private:
  double theta_;
  std::vector<double> grid_;
  // samplers_[0] draws the start; steps_[k] indexes the k-th innovation.
  std::vector<PairingSampler> samplers_;
  std::vector<std::size_t> steps_;
};

// Target of e^{-θu} 1_{[0, width)}(u).
PairingTarget ou_innovation_target(double theta, double width, const QuadratureConfig& cfg = {});

ProcessPath sample_ou(const LevyTriplet& triplet, double theta, const std::vector<double>& grid, const RngStream& rng,
                      const SamplerConfig& cfg = {});
std::vector<ProcessPath> sample_ou_paths(const LevyTriplet& triplet, double theta, const std::vector<double>& grid,
                                         std::size_t paths, const RngStream& rng, const SamplerConfig& cfg = {});

// Left inverse T{φ} = ǧ * φ of L* for L = Σ_k c_k D^k on ℝ.
struct KernelOperator {
  TestFunction kernel;
  // c_0, c_1, ...; orders above 2 are not supported.
  std::vector<double> whitening;
  std::string tag;
  std::optional<MembershipVerdict> membership;
};

// L = D + θI with g(u) = e^{-θu} 1_{u>=0}.
KernelOperator ou_operator(double theta);

// (T{φ})(t).
double apply_left_inverse(const KernelOperator& op, const TestFunction& phi, double t,
                          const QuadratureConfig& cfg = {});

// max over the test functions and the grid nodes of |T{L*φ} − φ|, with L*
// by central differences and T by midpoint convolution at grid step `h`.
// The test functions need bounded support.
double verify_left_inverse(const KernelOperator& op, const std::vector<TestFunction>& phis, double h);

struct CompatibilityEvidence {
  bool compatible = false;
  // m_{p∞,p0}(ν).
  Extended moment;
  // ∫ρ_{p0,p∞}(T{φ}) per witness bump.
  std::vector<Extended> witness_modulars;
  std::string reason;
};

// Moment condition m_{p∞,p0}(ν) < ∞ plus finiteness of ∫ρ_{p0,p∞}(T{φ}) for a
// fixed witness set of bumps. Requires a symmetric triplet without Gaussian
// part and 0 <= p0, p∞ <= 2.
CompatibilityEvidence compatibility_check(const LevyTriplet& triplet, double p0, double pinf,
                                          const KernelOperator& op, const QuadratureConfig& cfg = {});

}  // namespace levywn
