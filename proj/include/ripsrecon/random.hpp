#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace ripsrecon {

/// Deterministic random stream. All randomness in the library flows through a
/// single 64-bit seed; independent substreams are derived by name so that
/// e.g. the sampling stream and the noise stream of one experiment never
/// interleave. Doubles are produced from raw engine output, not from
/// std::uniform_real_distribution, so sequences are identical across
/// standard library implementations.
class RandomStream {
public:
  RandomStream(std::uint64_t seed, std::string_view substream)
      : engine_(mix(seed, substream)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * unit(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // rejection keeps the draw unbiased
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  /// Displacement uniform in the open ball of the given radius (rejection
  /// from the enclosing cube). radius == 0 writes zeros.
  void fill_in_ball(double radius, std::span<double> out) {
    if (radius == 0.0) {
      for (double& c : out) c = 0.0;
      return;
    }
    while (true) {
      double norm2 = 0.0;
      for (double& c : out) {
        c = uniform(-radius, radius);
        norm2 += c * c;
      }
      if (norm2 < radius * radius) return;
    }
  }

private:
  static std::uint64_t mix(std::uint64_t seed, std::string_view substream) {
    // FNV-1a over the substream name, folded into the seed, then one
    // splitmix64 finalization round.
    std::uint64_t h = 1469598103934665603ull;
    for (char c : substream) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

} // namespace ripsrecon
