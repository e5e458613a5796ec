#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anticode {

// Exact non-negative rational on 64-bit numerator/denominator with 128-bit
// intermediates.  Error probabilities are carried in this form so that
// cross-method comparisons are equality checks, not tolerance debates;
// conversion to double happens only for display.
class Rational {
 public:
  constexpr Rational() = default;

  Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    reduce();
  }

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  double value() const { return double(num_) / double(den_); }

  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    const unsigned __int128 n =
        (unsigned __int128)x.num_ * y.den_ + (unsigned __int128)y.num_ * x.den_;
    const unsigned __int128 d = (unsigned __int128)x.den_ * y.den_;
    return from128(n, d);
  }

  friend Rational operator*(const Rational& x, const Rational& y) {
    return from128((unsigned __int128)x.num_ * y.num_, (unsigned __int128)x.den_ * y.den_);
  }

  // x - y; requires x >= y (probabilities never go negative here).
  friend Rational operator-(const Rational& x, const Rational& y) {
    const unsigned __int128 a = (unsigned __int128)x.num_ * y.den_;
    const unsigned __int128 b = (unsigned __int128)y.num_ * x.den_;
    if (a < b) throw std::underflow_error("negative rational");
    return from128(a - b, (unsigned __int128)x.den_ * y.den_);
  }

  friend Rational operator/(const Rational& x, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("division by zero");
    return from128(x.num_, (unsigned __int128)x.den_ * k);
  }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;  // both reduced
  }

  friend bool operator<(const Rational& x, const Rational& y) {
    return (unsigned __int128)x.num_ * y.den_ < (unsigned __int128)y.num_ * x.den_;
  }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

 private:
  static Rational from128(unsigned __int128 n, unsigned __int128 d) {
    const unsigned __int128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > ~0ull || d > ~0ull)
      throw std::overflow_error("exact rational exceeds 64-bit range");
    Rational r;
    r.num_ = std::uint64_t(n);
    r.den_ = std::uint64_t(d);
    return r;
  }

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      const unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void reduce() {
    const std::uint64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace anticode
