#pragma once

namespace twrelay {

// Gauss hypergeometric function 2F1(a, b; c; z) for real parameters and real
// argument z < 1. Relative accuracy target 1e-10.
//
// Route map:
//   z == 0            -> 1 exactly
//   z < 0             -> Pfaff transformation onto (0, 1)
//   0 < z <= 1/2      -> defining series
//   1/2 < z < 1       -> linear transformation toward z = 1; when c - a - b is
//                        an integer the logarithmic connection formulas are
//                        used (with an Euler transformation first if needed to
//                        make the integer non-negative)
//
// Errors: z >= 1 is a domain error; c equal to a non-positive integer is a
// parameter error.
double gauss_2f1(double a, double b, double c, double z);

}  // namespace twrelay
