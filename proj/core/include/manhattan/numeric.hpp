#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace manhattan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt int_pow(const BigInt& base, unsigned exp);

// Exact power with the 0^0 = 1 convention.
Rational rational_pow(const Rational& base, unsigned exp);

// Lowest-terms "num/den" with positive denominator, e.g. "8/3", "0/1".
std::string fraction_string(const Rational& q);

// 17 significant digits, enough to round-trip an IEEE double.
std::string format_g17(double x);

double to_double(const Rational& q);

BigInt bigint_from_i128(__int128 v);

// Floor toward -inf, so floor_div2(-1) == -1.
constexpr std::int64_t floor_div2(std::int64_t x) { return x >> 1; }

}  // namespace manhattan
