#include "anticode/decode.hpp"

#include <unordered_set>

namespace anticode {

std::uint64_t intersection_size(const Word& ci, const Word& cj) {
  const std::size_t n = ci.length();
  const std::size_t s = ci.distance(cj);  // checks equal lengths
  if (s == 0)
    throw std::invalid_argument("intersection formula needs distinct codewords (s >= 1)");
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n - s; ++i) {
    if (r > ~0ull / 3) throw std::overflow_error("intersection size exceeds 64-bit range");
    r *= 3;
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (r > ~0ull / 2) throw std::overflow_error("intersection size exceeds 64-bit range");
    r *= 2;
  }
  return r;
}

DecodeOutcome sequential_decode(const Word& y, std::span<const Word> codewords) {
  for (std::size_t i = 0; i < codewords.size(); ++i)
    if (is_consistent(y, codewords[i])) return DecodeOutcome{i, 1};
  return DecodeOutcome{std::nullopt, 0};
}

DecodeOutcome ml_decode(const Word& y, std::span<const Word> codewords, Rng& rng) {
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < codewords.size(); ++i)
    if (is_consistent(y, codewords[i])) ties.push_back(i);
  if (ties.empty()) return DecodeOutcome{std::nullopt, 0};
  const std::size_t pick = std::size_t(rng.below(ties.size()));
  return DecodeOutcome{ties[pick], ties.size()};
}

bool validate_decoding_regions(const std::vector<std::vector<Word>>& regions,
                               std::span<const Word> codewords) {
  if (regions.size() != codewords.size()) return false;
  if (codewords.empty()) return false;
  const std::size_t n = codewords[0].length();
  if (n > 32) throw std::invalid_argument("region validation supports n <= 32");

  std::unordered_set<std::uint64_t> seen;  // union of the regions
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (const auto& w : regions[i]) {
      if (w.length() != n) return false;
      if (!is_consistent(w, codewords[i])) return false;       // (i)
      if (!seen.insert(w.packed()).second) return false;       // (ii)
    }
  }

  std::uint64_t union_size = 0;  // |union of all consistency sets|
  const std::uint64_t total = std::uint64_t(1) << (2 * n);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Word y = Word::from_packed(bits, n);
    bool covered = false;
    for (const auto& c : codewords)
      if (is_consistent(y, c)) {
        covered = true;
        break;
      }
    if (covered) {
      ++union_size;
      if (!seen.contains(bits)) return false;  // (iii), one direction
    }
  }
  return union_size == seen.size();  // (iii), other direction
}

}  // namespace anticode
