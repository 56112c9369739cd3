#pragma once

#include <vector>

#include "twrelay/mellin.hpp"

namespace twrelay {

// One numerator factor Gamma(e - E1*s - E2*t) coupling the two integration
// variables of a double Mellin-Barnes integral.
struct BivariateTerm {
    double e;
    double E1;
    double E2;
};

// Double Mellin-Barnes integrand specification:
//
//   H(z1, z2) = (2*pi*i)^{-2} * Integral over (s, t) of
//               [ prod_k Gamma(e_k - E1_k*s - E2_k*t) ]
//               * chi1(s) * chi2(t) * z1^{-s} * z2^{-t} ds dt
//
// where chi1/chi2 are the univariate kernels described by factor1/factor2
// (same convention as FoxHSpec::log_chi).  The joint factors must have
// E1 > 0 and E2 > 0 so their poles lie to the right of both contours.
struct BivariateFoxHSpec {
    std::vector<BivariateTerm> joint;
    FoxHSpec factor1;
    FoxHSpec factor2;

    void validate() const;  // throws parameter_error on malformed input
};

// Evaluates the double contour integral by trapezoidal quadrature on a
// product grid, exploiting conjugate symmetry to halve the t-contour.
// Results are cached per (spec, z1, z2, tol).  Throws domain_error for
// non-positive arguments, parameter_error if no contour satisfies the
// pole-separation constraints, convergence_error if grid refinement
// stalls (carrying the last two estimates).
double bivariate_fox_h(const BivariateFoxHSpec& spec, double z1, double z2,
                       double tol = 1e-6);

}  // namespace twrelay
