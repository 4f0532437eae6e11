#include "manhattan/formulas.hpp"

#include <stdexcept>

namespace manhattan {

namespace {

// (2-d)/d, the geometric ratio of the drift decay.
Rational decay_ratio(Dimension d) {
  return Rational(BigInt(2 - d.value()), BigInt(d.value()));
}

}  // namespace

Rational mean_coefficient(Dimension d, unsigned n) {
  const Rational rn = rational_pow(decay_ratio(d), n);
  return (Rational(1) - rn) / Rational(2 * (d.value() - 1));
}

BigInt msd_numerator(Dimension d, unsigned n) {
  const BigInt dv(d.value());
  return (2 * BigInt(d.value() - 1) * n - 1) * int_pow(dv, n) +
         int_pow(BigInt(2 - d.value()), n);
}

Rational msd(Dimension d, unsigned n) {
  // Multiply through by d so the denominator d^(n-1) stays integral at n = 0.
  const BigInt num = msd_numerator(d, n) * d.value();
  const BigInt den =
      int_pow(BigInt(d.value()), n) * 2 * int_pow(BigInt(d.value() - 1), 2);
  return Rational(num, den);
}

MomentSeries msd_series(Dimension d, unsigned n_max) {
  MomentSeries series{d, {}};
  series.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) series.values.push_back(msd(d, n));
  return series;
}

Rational recurrence_residual(Dimension d, const MomentSeries& v, unsigned n) {
  if (v.d.value() != d.value()) {
    throw std::invalid_argument("series dimension does not match");
  }
  if (v.values.size() < static_cast<std::size_t>(n) + 3) {
    throw std::out_of_range("series too short: residual at n needs entries n..n+2");
  }
  const Rational dv(d.value());
  return v.values[n + 2] - Rational(2) / dv * v.values[n + 1] -
         Rational(d.value() - 2) / dv * v.values[n];
}

Rational parity_prob_even(Dimension d, unsigned n) {
  const Rational half(1, 2);
  return half + half * rational_pow(decay_ratio(d), n);
}

Rational increment_mean(Dimension d, unsigned n) {
  return rational_pow(decay_ratio(d), n) / Rational(d.value());
}

Rational diffusive_limit(Dimension d) {
  return Rational(d.value(), d.value() - 1);
}

DivisionCheck numerator_divisibility(Dimension d, unsigned n) {
  const BigInt num = msd_numerator(d, n);
  const BigInt div = 2 * int_pow(BigInt(d.value() - 1), 2);
  const BigInt quotient = num / div;
  return DivisionCheck{quotient, quotient * div == num};
}

}  // namespace manhattan
