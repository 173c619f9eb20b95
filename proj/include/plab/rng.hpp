#pragma once

#include <cstdint>
#include <random>

namespace plab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded stream with an explicit uniform mapping; std::mt19937_64 is fully
// specified by the standard and the (x >> 11) * 2^-53 mapping avoids any
// library-dependent distribution code, so identical seeds give identical
// samples everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = eng_();
      if (x >= threshold) return x % n;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Independent stream for a (seed, stream index) pair; used to give every
// replicate block its own stream so results do not depend on worker count.
inline Rng substream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(seed ^ splitmix64(stream + 0x51ed2701)));
}

}  // namespace plab
