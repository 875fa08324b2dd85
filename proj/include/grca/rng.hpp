#pragma once

#include <cstdint>

namespace grca {

/// Deterministic pseudo-random stream (xoshiro256++ core, splitmix64 seeding).
///
/// Streams derived from distinct (seed, a, b, c) tuples are statistically
/// independent and bit-reproducible across platforms and thread counts, so
/// per-pixel / per-iteration substreams can be handed to parallel workers
/// without changing any output.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) { seed_state(seed); }

  /// Substream keyed by up to three counters (iteration, unit index, salt).
  static RngStream derive(std::uint64_t seed, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

  std::uint64_t next_u64();

  /// Uniform on the open interval (0,1), 53-bit resolution.
  double uniform01();

  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_int(std::uint64_t n);

  double normal();  // standard normal (Box-Muller, pair cached)
  double normal(double mu, double sigma) { return mu + sigma * normal(); }

  /// Gamma(shape, scale), density x^{shape-1} e^{-x/scale}. Marsaglia-Tsang.
  double gamma(double shape, double scale);

  /// Inverse gamma with density scale^shape x^{-shape-1} e^{-scale/x}.
  double inverse_gamma(double shape, double scale);

  double exponential(double rate);

  /// Normal(mu, sigma^2) conditioned on [lo, inf). Exact rejection sampler.
  double truncated_normal_lower(double mu, double sigma, double lo);

 private:
  void seed_state(std::uint64_t seed);

  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

namespace salt {
// Substream salts; one per randomized stage so streams never collide.
inline constexpr std::uint64_t kMixing = 0x11;
inline constexpr std::uint64_t kSigma2 = 0x12;
inline constexpr std::uint64_t kBeta = 0x13;
inline constexpr std::uint64_t kS = 0x14;
inline constexpr std::uint64_t kW = 0x15;
inline constexpr std::uint64_t kGmrfAux = 0x16;
inline constexpr std::uint64_t kSynthAbund = 0x21;
inline constexpr std::uint64_t kSynthPixel = 0x22;
inline constexpr std::uint64_t kSynthNoise = 0x23;
inline constexpr std::uint64_t kSynthPotts = 0x24;
inline constexpr std::uint64_t kSynthEndmember = 0x25;
inline constexpr std::uint64_t kGewekeData = 0x31;
}  // namespace salt

}  // namespace grca
