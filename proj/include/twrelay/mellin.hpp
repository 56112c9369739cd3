#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace twrelay {

// Parameter bundle for a Fox H-function
//   H^{m,n}_{p,q}(z | (a_1,A_1)..(a_p,A_p) ; (b_1,B_1)..(b_q,B_q))
// defined by the Mellin-Barnes integral of
//   chi(s) = [prod_{j<=m} G(b_j+B_j s) prod_{j<=n} G(1-a_j-A_j s)] /
//            [prod_{j>m} G(1-b_j-B_j s) prod_{j>n} G(a_j+A_j s)]
// against z^{-s}. With every A_j = B_j = 1 this is the Meijer G-function.
struct FoxHSpec {
    int m = 0;
    int n = 0;
    std::vector<std::pair<double, double>> upper;  // (a_j, A_j), size p
    std::vector<std::pair<double, double>> lower;  // (b_j, B_j), size q

    int p() const { return static_cast<int>(upper.size()); }
    int q() const { return static_cast<int>(lower.size()); }
    bool is_meijer() const;

    // Throws parameter_error on m > q, n > p, or non-positive coefficients.
    void validate() const;

    // Rightmost pole of the ascending families (-inf when m = 0).
    double left_pole_bound() const;
    // Leftmost pole of the descending families (+inf when n = 0).
    double right_pole_bound() const;
    // Exponential decay rate of |chi| along the vertical contour; must be
    // positive for the truncated-contour quadrature to converge.
    double contour_decay_rate() const;

    // log chi(s): sum of log-gammas, ready for exponentiation.
    std::complex<double> log_chi(std::complex<double> s) const;
};

// Vertical integration line for the Mellin-Barnes quadrature.
struct ContourSpec {
    double abscissa = 0.0;       // real part of the line
    double height = 0.0;         // truncation |Im s| <= height
    int node_limit = 15;         // max adaptive subdivision depth
    bool adaptive = true;        // double the height until estimates agree

    // Constructs the default contour for a spec: abscissa midway between the
    // pole families (shifted inward by one when a family is absent), height
    // sized from the decay rate.
    ContourSpec(const FoxHSpec& spec, double tol);
    // Validates a caller-chosen contour against the spec's pole families.
    ContourSpec(const FoxHSpec& spec, double abscissa, double height,
                int node_limit, bool adaptive);
};

// Unit-coefficient spec from plain parameter lists.
FoxHSpec make_meijer_spec(int m, int n, const std::vector<double>& a,
                          const std::vector<double>& b);

// Meijer G-function G^{m,n}_{p,q}(z | a; b): requires a unit-coefficient spec.
double meijer_g(const FoxHSpec& spec, double z, double tol = 1e-10);

// Fox H-function by Mellin-Barnes contour quadrature.
double fox_h(const FoxHSpec& spec, double z, double tol = 1e-10);
double fox_h(const FoxHSpec& spec, double z, const ContourSpec& contour,
             double tol = 1e-10);

}  // namespace twrelay
