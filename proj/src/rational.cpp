#include "ivif/rational.hpp"

#include <cctype>
#include <cstdint>

namespace ivif {

namespace {

using detail::int128;

// Accumulates a digit run into a 128-bit magnitude; 38 digits saturate
// int128, far beyond anything reducible to int64, so cap and let the
// rational constructor report overflow with a consistent message.
bool digits(std::string_view text, std::size_t& i, int128& value, int count_cap,
            int* count = nullptr) {
  int n = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    if (n >= count_cap) throw overflow_error("rational: literal has too many digits");
    value = value * 10 + (text[i] - '0');
    ++i;
    ++n;
  }
  if (count) *count = n;
  return n > 0;
}

rational from_i128(int128 n, int128 d, bool negative) {
  // Route through int64 via repeated construction to reuse range checks.
  constexpr int128 hi = std::numeric_limits<std::int64_t>::max();
  int128 g = detail::gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > hi || d > hi) throw overflow_error("rational: value not representable in 64 bits");
  rational r(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  return negative ? -r : r;
}

}  // namespace

rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  int128 whole = 0;
  bool have_whole = digits(text, i, whole, 30);

  if (i < text.size() && text[i] == '/') {
    ++i;
    int128 den = 0;
    if (!have_whole || !digits(text, i, den, 30) || i != text.size())
      throw parse_error("malformed rational: '" + std::string(text) + "'");
    if (den == 0) throw parse_error("malformed rational: zero denominator in '" +
                                    std::string(text) + "'");
    return from_i128(whole, den, negative);
  }

  if (i < text.size() && text[i] == '.') {
    ++i;
    int128 frac = 0;
    int frac_digits = 0;
    bool have_frac = digits(text, i, frac, 18, &frac_digits);
    if ((!have_whole && !have_frac) || i != text.size())
      throw parse_error("malformed rational: '" + std::string(text) + "'");
    int128 scale = 1;
    for (int k = 0; k < frac_digits; ++k) scale *= 10;
    return from_i128(whole * scale + frac, scale, negative);
  }

  if (!have_whole || i != text.size())
    throw parse_error("malformed rational: '" + std::string(text) + "'");
  return from_i128(whole, 1, negative);
}

}  // namespace ivif
