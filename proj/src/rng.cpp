#include "grca/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace grca {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

void RngStream::seed_state(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) word = splitmix64(x);
  has_cached_normal_ = false;
}

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t a,
                            std::uint64_t b, std::uint64_t c) {
  std::uint64_t x = seed;
  std::uint64_t h = splitmix64(x);
  x = h ^ (a + 0x9E3779B97F4A7C15ULL);
  h = splitmix64(x);
  x = h ^ (b + 0xC2B2AE3D27D4EB4FULL);
  h = splitmix64(x);
  x = h ^ (c + 0x165667B19E3779F9ULL);
  h = splitmix64(x);
  return RngStream(h);
}

std::uint64_t RngStream::next_u64() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RngStream::uniform01() {
  // (k + 0.5) * 2^-53 with k in [0, 2^53): strictly inside (0,1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_int(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("uniform_int: n must be >= 1");
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

double RngStream::normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_normal_ = r * std::sin(theta);
  has_cached_normal_ = true;
  return r * std::cos(theta);
}

double RngStream::gamma(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw std::invalid_argument("gamma: shape and scale must be positive");
  if (shape < 1.0) {
    // Boost: X ~ Gamma(shape+1), X * U^{1/shape} ~ Gamma(shape).
    const double u = uniform01();
    return gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v * scale;
  }
}

double RngStream::inverse_gamma(double shape, double scale) {
  double g = gamma(shape, 1.0 / scale);
  if (g < 1e-300) g = 1e-300;
  return 1.0 / g;
}

double RngStream::exponential(double rate) {
  return -std::log(uniform01()) / rate;
}

double RngStream::truncated_normal_lower(double mu, double sigma, double lo) {
  const double a = (lo - mu) / sigma;
  double z;
  if (a < 0.45) {
    // Acceptance probability >= Phi(-0.45) ~ 0.33.
    do {
      z = normal();
    } while (z < a);
  } else {
    // Robert (1995) shifted-exponential proposal for right tails.
    const double lambda = 0.5 * (a + std::sqrt(a * a + 4.0));
    for (;;) {
      z = a + exponential(lambda);
      const double diff = z - lambda;
      if (uniform01() <= std::exp(-0.5 * diff * diff)) break;
    }
  }
  return mu + sigma * z;
}

}  // namespace grca
