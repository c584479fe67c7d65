#pragma once

#include <cstdint>
#include <random>

namespace quartet {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded PRNG with portable derived draws. mt19937_64 raw output is fixed by
// the standard; the uniform mappings below avoid the implementation-defined
// std::*_distribution classes so identical seeds give identical streams on
// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed),
        gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream ^ 0x51ed2701a5c3b4dULL))) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound), bound >= 1, by rejection.
  int next_int(int bound) {
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = ~0ULL - ~0ULL % b;
    std::uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return static_cast<int>(v % b);
  }

  // Independent stream derived from the original seed (not from consumed
  // generator state), e.g. one per parallel search run.
  Rng spawn(std::uint64_t stream) const { return Rng(seed_, stream); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

}  // namespace quartet
