#pragma once

#include "manhattan/lattice.hpp"
#include "manhattan/numeric.hpp"

#include <vector>

namespace manhattan {

// A sequence of exact moments indexed by step count.
struct MomentSeries {
  Dimension d;
  std::vector<Rational> values;
};

struct DivisionCheck {
  BigInt quotient;
  bool exact;
};

// Scalar c(d,n) with E[X_n] = c * (1,...,1):
//   c = (1 - ((2-d)/d)^n) / (2(d-1)), with ((2-d)/d)^0 = 1.
Rational mean_coefficient(Dimension d, unsigned n);

// Mean square displacement v_n = E|X_n|^2:
//   v_n = ((2(d-1)n - 1) d^n + (2-d)^n) / (d^(n-1) 2(d-1)^2).
Rational msd(Dimension d, unsigned n);

// The literal numerator (2(d-1)n - 1) d^n + (2-d)^n, before any reduction.
BigInt msd_numerator(Dimension d, unsigned n);

// v_0 .. v_n_max.
MomentSeries msd_series(Dimension d, unsigned n_max);

// v[n+2] - (2/d) v[n+1] - ((d-2)/d) v[n]; equals exactly 2 on the true MSD
// sequence, for every n.
Rational recurrence_residual(Dimension d, const MomentSeries& v, unsigned n);

// P(Bin(n, (d-1)/d) is even) = 1/2 + 1/2 ((2-d)/d)^n; the parity of the
// coordinate sum perpendicular to any fixed axis after n steps.
Rational parity_prob_even(Dimension d, unsigned n);

// Per-coordinate E[X_{n+1} - X_n] = (1/d) ((2-d)/d)^n.
Rational increment_mean(Dimension d, unsigned n);

// lim_n v_n / n = d/(d-1).
Rational diffusive_limit(Dimension d);

// Divides the literal MSD numerator by 2(d-1)^2; `exact` reports whether the
// remainder was zero (it always is).
DivisionCheck numerator_divisibility(Dimension d, unsigned n);

}  // namespace manhattan
