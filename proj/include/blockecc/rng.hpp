// rng.hpp - seedable PRNG used by generators and randomized choosers.
//
// SplitMix64 (Steele, Lea, Flood 2014). Chosen over <random> engines so that
// generated graphs are bit-for-bit identical across platforms and standard
// library implementations. Bounded draws use plain modulo; the bias is
// negligible for the small bounds used here and keeps the stream portable.

#ifndef BLOCKECC_RNG_HPP
#define BLOCKECC_RNG_HPP

#include <cstdint>

namespace blockecc {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // Uniform draw in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Derives an independent child seed from (seed, index). Used to give every
// trial in a corpus its own stream, so trial k can be replayed in isolation.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed);
  std::uint64_t a = mixer.next();
  SplitMix64 mixer2(a ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  return mixer2.next();
}

}  // namespace blockecc

#endif  // BLOCKECC_RNG_HPP
