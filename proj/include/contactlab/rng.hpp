#pragma once

#include <cstdint>

namespace contactlab {

// SplitMix64. Streams are derived from (seed, index) so that batch items and
// Monte-Carlo trials are reproducible independently of execution order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  // Start states go through the finalizer on both inputs. Deriving them
  // linearly from the index would make consecutive streams shifted copies of
  // one another (outputs are mix(state + i*gamma)), which silently correlates
  // trials.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^
                      mix64(index + 0x3c6ef372fe94f82aULL));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix64(z);
  }

  // Uniform in [0, n) via multiply-shift; n == 0 is a caller error.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Compares the top 53 bits against p scaled to 2^53; exact for p in [0,1].
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
    return (next() >> 11) < threshold;
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace contactlab
