#include "twrelay/quadrature.hpp"

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "twrelay/errors.hpp"

namespace twrelay {

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (a == b) {
        return 0.0;
    }
    // Double-exponential rule: clusters nodes toward the endpoints, so
    // integrable endpoint singularities (log, inverse square root) converge
    // at the same rate as smooth integrands.  Reversed limits negate.
    const double sign = a < b ? 1.0 : -1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    static thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double error = 0.0;
    double l1 = 0.0;
    const double v = rule.integrate(f, lo, hi, tol, &error, &l1);
    if (!(std::isfinite(v))) {
        throw convergence_error("integrate: non-finite result", v, v);
    }
    if (error > tol * (1.0 + std::abs(v)) * 100.0) {
        throw convergence_error("integrate: error estimate above tolerance",
                                v - error, v);
    }
    return sign * v;
}

double integrate_to_infinity(const std::function<double(double)>& f,
                             double scale_hint, double tol, double tail_tol) {
    if (!(scale_hint > 0.0) || !std::isfinite(scale_hint)) {
        scale_hint = 1.0;
    }
    double total = 0.0;
    double lo = 0.0;
    double hi = scale_hint;
    for (int slice = 0; slice < 64; ++slice) {
        const double piece = integrate(f, lo, hi, tol);
        total += piece;
        if (slice > 2 && std::abs(piece) < tail_tol * (1.0 + std::abs(total))) {
            return total;
        }
        lo = hi;
        hi *= 2.0;
    }
    throw convergence_error("integrate_to_infinity: tail did not vanish",
                            total, total);
}

}  // namespace twrelay
