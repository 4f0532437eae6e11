#include "manhattan/numeric.hpp"

#include <cstdio>

namespace manhattan {

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

Rational rational_pow(const Rational& base, unsigned exp) {
  if (exp == 0) return Rational(1);
  return Rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

std::string fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string format_g17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt bigint_from_i128(__int128 v) {
  const bool negative = v < 0;
  // Two-step negation stays in range at the i128 minimum.
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  BigInt b = static_cast<std::uint64_t>(u >> 64);
  b <<= 64;
  b += static_cast<std::uint64_t>(u);
  return negative ? -b : b;
}

}  // namespace manhattan
