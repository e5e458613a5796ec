#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "anticode/budget.hpp"
#include "anticode/rng.hpp"
#include "anticode/word.hpp"

namespace anticode {

// A word y can have been received for codeword c exactly when it differs from
// c in every coordinate; the set of such words ("the consistency set of c")
// has 3^n members and is never materialized, only tested and enumerated.

struct DecodeOutcome {
  // Index into the codeword list, or empty when no codeword is consistent
  // with the received word (impossible for genuine channel output).
  std::optional<std::size_t> index;
  // Consistent codewords considered: the full tie set for the maximum-
  // likelihood decoder, 1 for the first-match decoder.
  std::size_t tie_count = 0;

  bool decoded() const { return index.has_value(); }
};

inline bool is_consistent(const Word& y, const Word& c) { return y.differs_everywhere(c); }

// |L(c)| = 3^n.
inline std::uint64_t consistency_set_size(std::size_t n) { return pow3_checked(n); }

// Size of the overlap of two consistency sets: 3^(n-s) 2^s where s is the
// Hamming distance of the centers (s >= 1 required).
std::uint64_t intersection_size(const Word& ci, const Word& cj);

// Decode to the first codeword in list order that is consistent with y.
DecodeOutcome sequential_decode(const Word& y, std::span<const Word> codewords);

// Decode to a uniformly random choice among all consistent codewords; the
// choice costs one draw from the caller's generator (none when the tie set
// has a single member).
DecodeOutcome ml_decode(const Word& y, std::span<const Word> codewords, Rng& rng);

// Checks an explicit partition against the three decoding-region conditions:
// each region inside its codeword's consistency set, regions pairwise
// disjoint, union equal to the union of the consistency sets.  Brute force
// over F4^n; intended for short codes.
bool validate_decoding_regions(const std::vector<std::vector<Word>>& regions,
                               std::span<const Word> codewords);

// Visits every member of the consistency set of `center` (n <= 32) in a fixed
// odometer order, as packed words.
template <class Fn>
void enumerate_consistent_words(const Word& center, Fn&& fn) {
  const std::size_t n = center.length();
  if (n == 0 || n > 32) throw std::invalid_argument("enumeration supports 1 <= n <= 32");
  // alt[i][t] = t-th letter different from center_i, in alphabet order.
  std::vector<std::array<std::uint8_t, 3>> alt(n);
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t c = center.get(i).value();
    std::uint8_t w = 0;
    for (std::uint8_t v = 0; v < 4; ++v)
      if (v != c) alt[i][w++] = v;
    y = packed::set(y, i, alt[i][0]);
  }
  std::vector<std::uint8_t> digit(n, 0);
  for (;;) {
    fn(std::uint64_t(y));
    std::size_t pos = 0;
    while (pos < n) {
      if (digit[pos] < 2) {
        ++digit[pos];
        y = packed::set(y, pos, alt[pos][digit[pos]]);
        break;
      }
      digit[pos] = 0;
      y = packed::set(y, pos, alt[pos][0]);
      ++pos;
    }
    if (pos == n) return;
  }
}

}  // namespace anticode
