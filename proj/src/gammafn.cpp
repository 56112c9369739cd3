#include "twrelay/gammafn.hpp"

#include <cmath>
#include <cstdlib>

#include "twrelay/errors.hpp"

namespace twrelay {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2
constexpr double kLogPi = 1.1447298858494001741;        // ln(pi)

std::complex<double> log_gamma_core(std::complex<double> z) {
    // Valid for Re(z) >= 0.5.
    z -= 1.0;
    std::complex<double> x = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        x += kLanczos[i] / (z + static_cast<double>(i));
    }
    const std::complex<double> t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && is_nonpositive_integer(z.real(), 0.0)) {
        throw domain_error("log_gamma: pole at non-positive integer");
    }
    if (z.real() >= 0.5) {
        return log_gamma_core(z);
    }
    // Reflection: log Gamma(z) = ln(pi) - log sin(pi z) - log Gamma(1 - z).
    // sin(pi z) overflows for |Im z| ~> 220, so fold out the dominant
    // exponential analytically: sin(pi z) = e^{pi |Im z|} * s, with s bounded.
    const double pi = 3.14159265358979323846;
    const std::complex<double> piz = pi * z;
    const double ay = std::abs(piz.imag());
    std::complex<double> log_sin;
    if (ay < 40.0) {
        log_sin = std::log(std::sin(piz));
    } else {
        // sin(w) = (e^{iw} - e^{-iw}) / 2i; for Im(w) = +-ay large the term
        // e^{+-iw} with positive real exponent dominates.
        const std::complex<double> iw(-piz.imag(), piz.real());
        if (piz.imag() > 0.0) {
            // sin(w) ~ -e^{-iw}/(2i): log = -iw - log(2i) + log(1 - e^{2iw})
            log_sin = -iw - std::complex<double>(std::log(2.0), pi / 2) +
                      std::log(1.0 - std::exp(2.0 * iw));
        } else {
            log_sin = iw - std::complex<double>(std::log(2.0), -pi / 2) +
                      std::log(1.0 - std::exp(-2.0 * iw));
        }
    }
    return kLogPi - log_sin - log_gamma_core(1.0 - z);
}

double digamma(double x) {
    if (is_nonpositive_integer(x)) {
        throw domain_error("digamma: pole at non-positive integer");
    }
    double result = 0.0;
    if (x < 0.0) {
        // Reflection: psi(x) = psi(1-x) - pi*cot(pi*x).
        const double pi = 3.14159265358979323846;
        result -= pi / std::tan(pi * x);
        x = 1.0 - x;
    }
    // Shift into the asymptotic region.
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // Stirling-type expansion: psi(x) ~ ln x - 1/(2x) - sum B_2k/(2k x^2k).
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // B_2k/(2k) for k = 1..7: 1/12, -1/120, 1/252, -1/240, 1/132,
    // -691/32760, 1/12.
    double tail = 0.0;
    double p = inv2;
    tail += p * (1.0 / 12.0);
    p *= inv2;
    tail -= p * (1.0 / 120.0);
    p *= inv2;
    tail += p * (1.0 / 252.0);
    p *= inv2;
    tail -= p * (1.0 / 240.0);
    p *= inv2;
    tail += p * (1.0 / 132.0);
    p *= inv2;
    tail -= p * (691.0 / 32760.0);
    p *= inv2;
    tail += p * (1.0 / 12.0);
    result += std::log(x) - 0.5 * inv - tail;
    return result;
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    return 1.0 / std::tgamma(x);
}

bool is_nonpositive_integer(double x, double tol) {
    if (x > 0.5) {
        return false;
    }
    const double nearest = std::nearbyint(x);
    return std::abs(x - nearest) <= tol;
}

}  // namespace twrelay
