#pragma once

#include <cstdint>
#include <complex>
#include <utility>

namespace skdv {

/// Purpose tag for a random draw.  Part of the substream coordinates, so
/// initial data, driving increments, bridge refinements and auxiliary
/// draws never collide.
enum class DrawKind : std::uint32_t {
  initial_data = 0,
  increment = 1,
  auxiliary = 2,
  // bridge draws for refinement level L use bridge_base + L
  bridge_base = 16,
};

/// Counter-based random number stream (Philox4x32-10).
///
/// Draws are a pure function of (master_seed, realization, mode, step, kind),
/// so identical coordinates reproduce identical values independent of thread
/// count or evaluation order.  Changing the truncation level or the number of
/// realizations never shifts anybody else's stream.
class RngStream {
public:
  explicit RngStream(std::uint64_t master_seed) : seed_(master_seed) {}

  std::uint64_t master_seed() const { return seed_; }

  /// Two independent U(0,1) variates (strictly inside the open interval).
  std::pair<double, double> uniform_pair(std::uint64_t realization,
                                         std::uint32_t mode, std::uint64_t step,
                                         std::uint32_t kind) const;

  /// Two independent standard normal variates.
  std::pair<double, double> normal_pair(std::uint64_t realization,
                                        std::uint32_t mode, std::uint64_t step,
                                        std::uint32_t kind) const;

  std::pair<double, double> normal_pair(std::uint64_t realization,
                                        std::uint32_t mode, std::uint64_t step,
                                        DrawKind kind) const {
    return normal_pair(realization, mode, step,
                       static_cast<std::uint32_t>(kind));
  }

  /// Complex draw z with independent N(0, sigma^2) real and imaginary parts.
  std::complex<double> complex_normal(std::uint64_t realization,
                                      std::uint32_t mode, std::uint64_t step,
                                      DrawKind kind, double sigma) const {
    auto [a, b] = normal_pair(realization, mode, step,
                              static_cast<std::uint32_t>(kind));
    return {sigma * a, sigma * b};
  }

private:
  std::uint64_t seed_;
};

/// Inverse of the standard normal CDF (Wichura's PPND16, AS 241).
/// Accurate to ~1e-16 relative over (0,1).
double inverse_normal_cdf(double p);

}  // namespace skdv
