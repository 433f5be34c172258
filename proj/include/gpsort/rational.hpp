#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gpsort {

// Exact rational with int64 numerator/denominator and 128-bit
// intermediates. Always normalized: den > 0, gcd(|num|, den) == 1.
//
// Neighborhood probabilities have denominators dividing
// lcm(3*L*n, 6*N*n, 3*L) with L <= ~2000 and N = 2L-1, which stays below
// 1e14; sums and products of those fit comfortably in the 128-bit
// intermediates. Results that cannot be renormalized back into int64
// throw std::overflow_error rather than silently wrapping.
class Rational {
  using i128 = __int128;

 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return double(num_) / double(den_); }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  static i128 abs128(i128 v) { return v < 0 ? -v : v; }

  static i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 num, i128 den) {
    Rational r;
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = std::int64_t(-0x7fffffffffffffff) - 1;
    constexpr i128 hi = std::int64_t(0x7fffffffffffffff);
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational out of int64 range");
    r.num_ = std::int64_t(num);
    r.den_ = num == 0 ? 1 : std::int64_t(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = make(i128(num), i128(den));
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gpsort
