#pragma once

#include <array>
#include <cstdint>

namespace gencor {

/// SplitMix64 step; used for seeding and stream derivation.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// xoshiro256** with SplitMix64 seeding. Every variate is derived from the raw 64-bit stream
/// with fixed arithmetic, so a seed reproduces the same sequence on any IEEE-754 platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform() noexcept;
  /// Standard normal by the Box-Muller transform.
  double normal() noexcept;
  double exponential() noexcept;
  /// Gamma(shape, 1) by Marsaglia-Tsang; shape < 1 via the U^(1/shape) boost.
  double gamma(double shape) noexcept;

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Seed of the stream for one (seed, tag, n) triple: SplitMix64 applied to the three inputs
/// in turn. Different families or sizes with the same user seed get unrelated streams.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t n) noexcept;

}  // namespace gencor
