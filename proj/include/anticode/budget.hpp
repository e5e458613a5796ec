#pragma once

#include <cstdint>
#include <stdexcept>

namespace anticode {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caps on the exhaustive enumerations.  Exact error analysis walks 3^n words
// per codeword, the coset method walks the 3^n full-weight words once, and
// codeword enumeration touches all 4^k codewords; each cap names the loop it
// guards.  A single CLI flag (or ANTICODE_BUDGET) overrides all three.
struct Budget {
  std::uint64_t exact_ops = std::uint64_t(1) << 32;    // 3^n * M for exact analysis
  std::uint64_t coset_words = std::uint64_t(1) << 30;  // 3^n for the coset method
  std::uint64_t codewords = std::uint64_t(1) << 26;    // 4^k enumerations

  static Budget uniform(std::uint64_t limit) {
    Budget b;
    b.exact_ops = limit;
    b.coset_words = limit;
    b.codewords = limit;
    return b;
  }
};

// 3^e with overflow detection (3^40 is the last power that fits 64 bits).
inline std::uint64_t pow3_checked(std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > ~0ull / 3) throw std::overflow_error("3^n exceeds 64-bit range");
    r *= 3;
  }
  return r;
}

inline std::uint64_t pow4_checked(std::size_t e) {
  if (e > 31) throw std::overflow_error("4^k exceeds 64-bit range");
  return std::uint64_t(1) << (2 * e);
}

}  // namespace anticode
