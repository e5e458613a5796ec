#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace anticode {

// Element of the four-element field {0, 1, a, b}.  Stored as two bits with
// 0 -> 00, 1 -> 01, a -> 10, b -> 11; the channel letters A, B, C, D map to
// 0, 1, a, b in that order.  Addition is bitwise XOR (characteristic 2),
// multiplication is a 16-entry lookup table.
class F4 {
 public:
  constexpr F4() = default;
  constexpr explicit F4(std::uint8_t v)
      : v_(v < 4 ? v : throw std::invalid_argument("field element out of range")) {}

  constexpr std::uint8_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr F4 operator+(F4 x, F4 y) { return F4(std::uint8_t(x.v_ ^ y.v_)); }
  friend constexpr F4 operator*(F4 x, F4 y) { return F4(kMulTable[x.v_ * 4 + y.v_]); }
  friend constexpr bool operator==(F4 x, F4 y) = default;

 private:
  static constexpr std::array<std::uint8_t, 16> kMulTable = {
      0, 0, 0, 0,   // 0 * {0,1,a,b}
      0, 1, 2, 3,   // 1 * {0,1,a,b}
      0, 2, 3, 1,   // a * {0,1,a,b}
      0, 3, 1, 2};  // b * {0,1,a,b}

  std::uint8_t v_ = 0;
};

inline constexpr F4 f4_zero{0};
inline constexpr F4 f4_one{1};
inline constexpr F4 f4_a{2};
inline constexpr F4 f4_b{3};

constexpr F4 f4_add(F4 x, F4 y) { return x + y; }
constexpr F4 f4_mul(F4 x, F4 y) { return x * y; }

// Multiplicative inverse of a nonzero element (1 -> 1, a -> b, b -> a).
constexpr F4 f4_inv(F4 x) {
  if (x.is_zero()) throw std::invalid_argument("zero has no multiplicative inverse");
  constexpr std::array<std::uint8_t, 4> inv = {0, 1, 3, 2};
  return F4(inv[x.value()]);
}

inline constexpr char kSymbolChars[4] = {'0', '1', 'a', 'b'};
inline constexpr char kLetterChars[4] = {'A', 'B', 'C', 'D'};

constexpr char symbol_char(F4 x) { return kSymbolChars[x.value()]; }
constexpr char letter_char(F4 x) { return kLetterChars[x.value()]; }

// Single-symbol parse: digits 0..3 (2 and 3 alias a and b) and the symbols
// a, b, case-insensitively.
constexpr F4 f4_from_symbol(char c) {
  switch (c) {
    case '0': return f4_zero;
    case '1': return f4_one;
    case '2': case 'a': case 'A': return f4_a;
    case '3': case 'b': case 'B': return f4_b;
    default: throw std::invalid_argument(std::string("invalid field symbol '") + c + "'");
  }
}

constexpr F4 f4_from_letter(char c) {
  switch (c) {
    case 'A': return f4_zero;
    case 'B': return f4_one;
    case 'C': return f4_a;
    case 'D': return f4_b;
    default: throw std::invalid_argument(std::string("invalid channel letter '") + c + "'");
  }
}

}  // namespace anticode
