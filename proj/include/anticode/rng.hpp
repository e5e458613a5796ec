#pragma once

#include <cstdint>
#include <stdexcept>

namespace anticode {

// splitmix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Deterministic 64-bit generator (splitmix64).  Every piece of randomness in
// the library takes one of these explicitly, so identical seeds reproduce
// identical transcripts bit for bit on any platform.  derive() gives
// independent per-trial streams from a master seed and a counter, which keeps
// partitioned Monte Carlo runs independent of the thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng derive(std::uint64_t master, std::uint64_t stream) {
    return Rng(mix64(master) ^ mix64(mix64(stream) + 0x632be59bd9b4e019ull));
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Exactly uniform over [0, bound) via rejection; no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    if (bound == 1) return 0;
    const std::uint64_t limit = (~0ull / bound) * bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace anticode
