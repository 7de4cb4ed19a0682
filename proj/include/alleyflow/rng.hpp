#pragma once

#include <cassert>
#include <cstdint>

namespace alleyflow {

// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen over the standard
// <random> engines because its output is fully specified here: the same
// seed produces the same stream on every platform, which golden fixtures
// and seeded test batches depend on. std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by rejection below.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n), unbiased via rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    assert(n > 0);
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform double in [0, 1), 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Independent stream derived from this generator's current state; used
  // to give each walker its own seed so batches can be sharded.
  SplitMix64 split(std::uint64_t stream) const {
    std::uint64_t z = state_ + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return SplitMix64(z ^ (z >> 31));
  }

private:
  std::uint64_t state_;
};

}  // namespace alleyflow
