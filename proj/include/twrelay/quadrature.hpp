#pragma once

#include <functional>

namespace twrelay {

// Adaptive Gauss-Kronrod integral of f over [a, b] (b may be infinite).
// Throws convergence_error when the error estimate stays above `tol` relative
// to the result.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9);

// Integral of f over [0, inf) as sum of adaptive integrals on [0, U] with U
// grown geometrically until the last slice contributes less than `tail_tol`
// in absolute value. Suited to densities with algebraic or exponential tails.
double integrate_to_infinity(const std::function<double(double)>& f,
                             double scale_hint, double tol = 1e-9,
                             double tail_tol = 1e-10);

}  // namespace twrelay
