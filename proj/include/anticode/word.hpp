#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anticode/gf4.hpp"

namespace anticode {

namespace packed {

// Two bits per symbol, 32 symbols per 64-bit limb.  The low bit of a symbol
// sits at bit 2i, the high bit at 2i+1.
inline constexpr std::uint64_t kLoMask = 0x5555555555555555ull;

constexpr std::uint64_t symbol_mask(std::size_t n_symbols) {
  return n_symbols >= 32 ? ~0ull : ((1ull << (2 * n_symbols)) - 1);
}

// Bit 2i set iff symbol i is nonzero.
constexpr std::uint64_t nonzero_lanes(std::uint64_t limb) {
  return (limb | (limb >> 1)) & kLoMask;
}

constexpr int weight(std::uint64_t limb) { return std::popcount(nonzero_lanes(limb)); }

constexpr int distance(std::uint64_t x, std::uint64_t y) { return weight(x ^ y); }

// True iff x and y differ in all n symbol positions.
constexpr bool differs_everywhere(std::uint64_t x, std::uint64_t y, std::size_t n) {
  const std::uint64_t full = kLoMask & symbol_mask(n);
  return nonzero_lanes(x ^ y) == full;
}

// Componentwise multiplication by a fixed scalar, bit-parallel.  For each
// symbol (h, l): a*(h,l) = (h^l, h), and b = a*a.
constexpr std::uint64_t scale(std::uint64_t limb, F4 t) {
  switch (t.value()) {
    case 0: return 0;
    case 1: return limb;
    case 2: {
      const std::uint64_t h = (limb >> 1) & kLoMask;
      const std::uint64_t l = limb & kLoMask;
      return ((h ^ l) << 1) | h;
    }
    default: {
      const std::uint64_t h = (limb >> 1) & kLoMask;
      const std::uint64_t l = limb & kLoMask;
      return (l << 1) | (h ^ l);
    }
  }
}

constexpr std::uint64_t get(std::uint64_t limb, std::size_t i) { return (limb >> (2 * i)) & 3; }

constexpr std::uint64_t set(std::uint64_t limb, std::size_t i, std::uint64_t v) {
  return (limb & ~(3ull << (2 * i))) | (v << (2 * i));
}

}  // namespace packed

// Fixed-length word over F4.  Immutable after construction; symbols are kept
// two bits each in 64-bit limbs so that weight/distance/consistency checks
// run bit-parallel even for long words.
class Word {
 public:
  Word() = default;

  explicit Word(std::span<const F4> symbols) : n_(symbols.size()) {
    limbs_.resize(limb_count(n_), 0);
    for (std::size_t i = 0; i < symbols.size(); ++i) set(i, symbols[i]);
  }

  explicit Word(const std::vector<F4>& symbols) : Word(std::span<const F4>(symbols)) {}

  static Word zero(std::size_t n) {
    Word w;
    w.n_ = n;
    w.limbs_.resize(limb_count(n), 0);
    return w;
  }

  static Word from_packed(std::uint64_t bits, std::size_t n) {
    if (n > 32) throw std::invalid_argument("packed form holds at most 32 symbols");
    Word w = zero(n);
    if (n > 0) w.limbs_[0] = bits & packed::symbol_mask(n);
    return w;
  }

  // Accepts the symbol form "01ab" (digits 2,3 alias a,b; a,b case-insensitive)
  // and the channel-letter form ABCD.  A token consisting only of letters
  // A-D that contains C or D is read as letters; otherwise symbols, so "AB"
  // reads as (a, b).
  static Word parse(std::string_view text);

  std::size_t length() const { return n_; }

  F4 get(std::size_t i) const {
    return F4(std::uint8_t(packed::get(limbs_[i / 32], i % 32)));
  }

  Word plus(const Word& o) const {
    require_same_length(o);
    Word r = *this;
    for (std::size_t i = 0; i < limbs_.size(); ++i) r.limbs_[i] ^= o.limbs_[i];
    return r;
  }

  Word times(F4 t) const {
    Word r = *this;
    for (auto& limb : r.limbs_) limb = packed::scale(limb, t);
    return r;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (const auto limb : limbs_) w += std::size_t(packed::weight(limb));
    return w;
  }

  std::size_t distance(const Word& o) const {
    require_same_length(o);
    std::size_t d = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i)
      d += std::size_t(packed::distance(limbs_[i], o.limbs_[i]));
    return d;
  }

  bool differs_everywhere(const Word& o) const {
    require_same_length(o);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      const std::size_t lanes = i + 1 < limbs_.size() ? 32 : n_ - 32 * i;
      if (!packed::differs_everywhere(limbs_[i], o.limbs_[i], lanes)) return false;
    }
    return true;
  }

  std::uint64_t packed() const {
    if (n_ > 32) throw std::logic_error("word longer than 32 symbols has no single-limb form");
    return limbs_.empty() ? 0 : limbs_[0];
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) s[i] = symbol_char(get(i));
    return s;
  }

  std::string to_letters() const {
    std::string s(n_, 'A');
    for (std::size_t i = 0; i < n_; ++i) s[i] = letter_char(get(i));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend class WordBuilder;

  static std::size_t limb_count(std::size_t n) { return (n + 31) / 32; }

  void require_same_length(const Word& o) const {
    if (n_ != o.n_) throw std::invalid_argument("word lengths differ");
  }

  void set(std::size_t i, F4 v) {
    limbs_[i / 32] = packed::set(limbs_[i / 32], i % 32, v.value());
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> limbs_;
};

// Incremental construction for long sequences (raw key material and the
// like); the finished Word is immutable as usual.
class WordBuilder {
 public:
  explicit WordBuilder(std::size_t n) { w_ = Word::zero(n); }
  void set(std::size_t i, F4 v) { w_.set(i, v); }
  Word take() { return std::move(w_); }

 private:
  Word w_;
};

inline Word Word::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty word");
  bool letters_only = true, has_cd = false;
  for (const char c : text) {
    if (c == 'C' || c == 'D') has_cd = true;
    if (c != 'A' && c != 'B' && c != 'C' && c != 'D') letters_only = false;
  }
  std::vector<F4> symbols;
  symbols.reserve(text.size());
  if (letters_only && has_cd) {
    for (const char c : text) symbols.push_back(f4_from_letter(c));
  } else {
    for (const char c : text) symbols.push_back(f4_from_symbol(c));
  }
  return Word(symbols);
}

inline std::size_t hamming_distance(const Word& x, const Word& y) { return x.distance(y); }
inline std::size_t hamming_weight(const Word& x) { return x.weight(); }

}  // namespace anticode
