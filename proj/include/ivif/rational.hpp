/**
 * @file rational.hpp
 * @brief Exact reduced fraction over int64 with overflow-checked arithmetic.
 *
 * Invariants: den > 0, gcd(|num|, den) == 1, zero is 0/1.
 * Intermediate products are computed in 128-bit; a result whose reduced
 * numerator or denominator does not fit in int64 throws overflow_error
 * instead of wrapping. Comparisons cross-multiply in 128-bit and are
 * therefore always exact.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ivif/errors.hpp"

namespace ivif {

namespace detail {

using int128 = __int128;

inline int128 abs128(int128 v) { return v < 0 ? -v : v; }

// Euclid on 128-bit magnitudes; std::gcd is unavailable for __int128 in
// strict conformance mode.
inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace detail

class rational {
 public:
  rational() = default;
  rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    *this = make(n, d);
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend rational operator+(const rational& a, const rational& b) {
    return make(detail::int128(a.num_) * b.den_ + detail::int128(b.num_) * a.den_,
                detail::int128(a.den_) * b.den_);
  }
  friend rational operator-(const rational& a, const rational& b) {
    return make(detail::int128(a.num_) * b.den_ - detail::int128(b.num_) * a.den_,
                detail::int128(a.den_) * b.den_);
  }
  friend rational operator*(const rational& a, const rational& b) {
    return make(detail::int128(a.num_) * b.num_, detail::int128(a.den_) * b.den_);
  }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational: division by zero");
    return make(detail::int128(a.num_) * b.den_, detail::int128(a.den_) * b.num_);
  }
  rational operator-() const {
    rational r;
    r.num_ = -num_;  // int64 min never occurs: den > 0 kept |num| < 2^63
    r.den_ = den_;
    return r;
  }

  rational& operator+=(const rational& b) { return *this = *this + b; }
  rational& operator-=(const rational& b) { return *this = *this - b; }
  rational& operator*=(const rational& b) { return *this = *this * b; }
  rational& operator/=(const rational& b) { return *this = *this / b; }

  friend bool operator==(const rational& a, const rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend std::strong_ordering operator<=>(const rational& a, const rational& b) noexcept {
    detail::int128 lhs = detail::int128(a.num_) * b.den_;
    detail::int128 rhs = detail::int128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "n" when the denominator is 1, "n/d" otherwise.
  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  /// Nearest double, for display only; never feeds back into arithmetic.
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) {
    return os << r.to_string();
  }

 private:
  static rational make(detail::int128 n, detail::int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) d = 1;
    detail::int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr detail::int128 lo = std::numeric_limits<std::int64_t>::min();
    constexpr detail::int128 hi = std::numeric_limits<std::int64_t>::max();
    if (n < lo || n > hi || d > hi)
      throw overflow_error("rational: value not representable in 64 bits");
    rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  std::int64_t num_{0};
  std::int64_t den_{1};
};

/// Parses "3/10", "-3/10", "0.25", ".5", "7" (optional sign, no whitespace).
/// Decimal forms expand exactly: "0.25" is 1/4, never a binary float.
rational parse_rational(std::string_view text);

}  // namespace ivif
