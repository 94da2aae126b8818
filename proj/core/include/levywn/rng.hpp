#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace levywn {

// Philox4x32-10 keyed by `seed`; the stream id occupies the upper half of the
// 128-bit counter, so distinct ids never share a block.
class RngStream {
 public:
  using result_type = std::uint32_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Independent stream number `index` below this one; a pure function of
  // (seed, stream_id, index).
  RngStream substream(std::uint64_t index) const;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double exponential();
  // Standard normal (Box-Muller, cosine branch).
  double normal();
  std::uint64_t poisson(double mean);

  static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> ctr,
                                             std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned used_ = 4;
};

}  // namespace levywn
