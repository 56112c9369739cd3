#pragma once

namespace twrelay {

// Modified Bessel function of the second kind, K_order(x), for real order and
// x > 0. Relative accuracy ~1e-12 over x in [1e-6, 700]; underflows to 0 once
// e^{-x} leaves the representable range.
//
// Evaluation strategy:
//   x <= 2              ascending series (integer orders), closed form
//                       (half-integer orders), integral representation
//                       otherwise
//   2 < x < 30          tanh-sinh quadrature of the cosh integral
//                       representation, scaled by e^{-x}
//   x >= 30             asymptotic expansion truncated at its smallest term
// Integer and half-integer orders above the base pair use the upward
// recurrence K_{v+1} = K_{v-1} + (2v/x) K_v (stable in that direction).
double bessel_k(double order, double x);

// e^{x} K_order(x): the exponentially scaled variant, usable for large x where
// K itself underflows.
double bessel_k_scaled(double order, double x);

}  // namespace twrelay
