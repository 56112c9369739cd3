#include "twrelay/hyp2f1.hpp"

#include <cmath>
#include <cstdlib>

#include "twrelay/errors.hpp"
#include "twrelay/gammafn.hpp"

namespace twrelay {

namespace {

constexpr int kMaxTerms = 2000;
constexpr double kEps = 1e-16;

// Defining series; converges for |z| < 1, fast for |z| <= 1/2, exact
// (terminating) when a or b is a non-positive integer.
double series_2f1(double a, double b, double c, double z) {
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (term == 0.0 || std::abs(term) < kEps * std::abs(sum)) {
            return sum;
        }
    }
    throw convergence_error("gauss_2f1: series did not converge", sum - term, sum);
}

// z -> 1-z connection for non-integer c-a-b (two ordinary series).
double transform_noninteger(double a, double b, double c, double z) {
    const double s = c - a - b;
    const double w = 1.0 - z;
    const double coef1 =
        std::tgamma(c) * std::tgamma(s) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
    const double coef2 =
        std::tgamma(c) * std::tgamma(-s) * reciprocal_gamma(a) * reciprocal_gamma(b);
    double v = 0.0;
    if (coef1 != 0.0) {
        v += coef1 * series_2f1(a, b, 1.0 - s, w);
    }
    if (coef2 != 0.0) {
        v += coef2 * std::pow(w, s) * series_2f1(c - a, c - b, 1.0 + s, w);
    }
    return v;
}

// z -> 1-z connection for c = a + b + m with integer m >= 0 (logarithmic
// case). The m = 0 specialization is the usual c = a+b formula.
double transform_log_case(double a, double b, int m, double z) {
    const double w = 1.0 - z;
    const double lw = std::log(w);
    const double c = a + b + m;
    double finite_part = 0.0;
    if (m > 0) {
        // sum_{k=0}^{m-1} (a)_k (b)_k / (k! (1-m)_k) w^k
        double term = 1.0, sum = 1.0;
        for (int k = 1; k < m; ++k) {
            term *= (a + k - 1.0) * (b + k - 1.0) / (k * (1.0 - m + k - 1.0)) * w;
            sum += term;
        }
        finite_part = std::tgamma(static_cast<double>(m)) * std::tgamma(c) *
                      reciprocal_gamma(a + m) * reciprocal_gamma(b + m) * sum;
    }

    // - Gamma(c)/(Gamma(a)Gamma(b)) (z-1)^m
    //   sum_k (a+m)_k (b+m)_k / (k!(k+m)!) w^k
    //   [ln w - psi(k+1) - psi(k+m+1) + psi(a+k+m) + psi(b+k+m)]
    const double coef = reciprocal_gamma(a) * reciprocal_gamma(b);
    double log_part = 0.0;
    if (coef != 0.0) {
        double psi_k1 = digamma(1.0);
        double psi_km1 = digamma(m + 1.0);
        double psi_akm = digamma(a + m);
        double psi_bkm = digamma(b + m);
        double fac = 1.0 / std::tgamma(m + 1.0);  // (a+m)_k (b+m)_k/(k!(k+m)!)
        double sum = fac * (lw - psi_k1 - psi_km1 + psi_akm + psi_bkm);
        for (int k = 1; k < kMaxTerms; ++k) {
            fac *= (a + m + k - 1.0) * (b + m + k - 1.0) / (static_cast<double>(k) * (k + m)) * w;
            psi_k1 += 1.0 / k;
            psi_km1 += 1.0 / (k + m);
            psi_akm += 1.0 / (a + m + k - 1.0);
            psi_bkm += 1.0 / (b + m + k - 1.0);
            const double add = fac * (lw - psi_k1 - psi_km1 + psi_akm + psi_bkm);
            sum += add;
            if (std::abs(add) < kEps * std::abs(sum) || fac == 0.0) {
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                log_part = -std::tgamma(c) * coef * sign * std::pow(w, m) * sum;
                return finite_part + log_part;
            }
        }
        throw convergence_error("gauss_2f1: logarithmic series did not converge", 0.0, 0.0);
    }
    return finite_part;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
    if (z >= 1.0) {
        throw domain_error("gauss_2f1: requires z < 1");
    }
    if (is_nonpositive_integer(c)) {
        throw parameter_error("gauss_2f1: c must not be a non-positive integer");
    }
    if (z == 0.0) {
        return 1.0;
    }
    // Terminating series: polynomial in z, valid everywhere.
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        return series_2f1(a, b, c, z);
    }
    // Elementary reductions keep the common paths exact.
    if (c == a) {
        return std::pow(1.0 - z, -b);
    }
    if (c == b) {
        return std::pow(1.0 - z, -a);
    }
    if (z < 0.0) {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), argument in (0,1).
        return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0));
    }
    if (z <= 0.5) {
        return series_2f1(a, b, c, z);
    }

    const double s = c - a - b;
    const double m_real = std::nearbyint(s);
    if (std::abs(s - m_real) < 1e-10) {
        const int m = static_cast<int>(m_real);
        if (m < 0) {
            // Euler transformation flips the sign of c-a-b.
            return std::pow(1.0 - z, s) * transform_log_case(c - a, c - b, -m, z);
        }
        return transform_log_case(a, b, m, z);
    }
    return transform_noninteger(a, b, c, z);
}

}  // namespace twrelay
