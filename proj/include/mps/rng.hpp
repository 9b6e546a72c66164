#ifndef MPS_RNG_HPP
#define MPS_RNG_HPP

#include <cstdint>

namespace mps {

// Deterministic seeded stream (splitmix64). Used for every "generic choice"
// in the library so runs are reproducible across platforms.
class SeededStream {
  uint64_t state_;

 public:
  explicit SeededStream(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n)
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  // Small coefficient in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }
};

}  // namespace mps

#endif
