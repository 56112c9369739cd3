#pragma once

#include <complex>

namespace twrelay {

// log Gamma(z) for complex z.
//
// Lanczos approximation (g = 7, 9 terms) with the reflection formula for
// Re(z) < 0.5. Relative accuracy is ~1e-13 over the vertical contours used by
// the Mellin-Barnes machinery. The imaginary part in the reflected half-plane
// may differ from the continuous branch by a multiple of 2*pi; exp(log_gamma)
// is exact either way, which is all the contour integrands consume.
std::complex<double> log_gamma(std::complex<double> z);

// Digamma (psi) for real x. Poles at non-positive integers are a domain error.
double digamma(double x);

// 1/Gamma(x) for real x, returning exactly 0 at the poles (non-positive
// integers). Used by hypergeometric connection coefficients where a pole of
// Gamma annihilates a term.
double reciprocal_gamma(double x);

// true if x is within `tol` of a non-positive integer (pole of Gamma).
bool is_nonpositive_integer(double x, double tol = 1e-12);

}  // namespace twrelay
