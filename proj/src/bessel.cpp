#include "twrelay/bessel.hpp"

#include <cmath>
#include <limits>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "twrelay/errors.hpp"

namespace twrelay {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kPi = 3.14159265358979323846;

// Ascending series for K_0 and K_1, x <= 2 (A&S 9.6.10-9.6.13 family).
// K_0(x) = -(ln(x/2) + gamma) I_0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 * H_k
// K_1(x) = 1/x + ln(x/2) I_1(x)
//          - (x/4) sum_{k>=0} [psi(k+1) + psi(k+2)] (x^2/4)^k / (k! (k+1)!)
double k0_series(double x) {
    const double q = 0.25 * x * x;
    const double lx = std::log(0.5 * x);
    double i0 = 1.0, term = 1.0, corr = 0.0, hk = 0.0;
    for (int k = 1; k < 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        hk += 1.0 / k;
        i0 += term;
        corr += term * hk;
        if (term < 1e-18 * i0) break;
    }
    return -(lx + kEulerGamma) * i0 + corr;
}

double k1_series(double x) {
    const double q = 0.25 * x * x;
    const double lx = std::log(0.5 * x);
    // I_1(x) = (x/2) sum q^k / (k! (k+1)!)
    double i1s = 1.0, term = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        i1s += term;
        if (term < 1e-18 * i1s) break;
    }
    const double i1 = 0.5 * x * i1s;
    // psi(k+1) + psi(k+2) starting at k=0: -2*gamma + 1, then recurrences.
    double psum = -2.0 * kEulerGamma + 1.0;
    double s = psum, t = 1.0;
    for (int k = 1; k < 40; ++k) {
        t *= q / (static_cast<double>(k) * (k + 1));
        psum += 1.0 / k + 1.0 / (k + 1.0);
        const double add = t * psum;
        s += add;
        if (std::abs(add) < 1e-18 * std::abs(s)) break;
    }
    return 1.0 / x + lx * i1 - 0.25 * x * s;
}

// e^{x} K_v(x) by tanh-sinh quadrature of
//   K_v(x) = int_0^inf e^{-x cosh t} cosh(v t) dt.
// The e^{-x} is folded out so the integrand is e^{-x(cosh t - 1)} cosh(vt).
double scaled_k_quadrature(double v, double x) {
    static thread_local boost::math::quadrature::tanh_sinh<double> integrator(12);
    const double av = std::abs(v);
    // Integrand support: decays once x(cosh t - 1) >> 1, i.e. beyond
    // t ~ acosh(1 + 50/x); cosh(vt) growth is dominated for all finite v.
    const double tmax = std::acosh(1.0 + (120.0 + 40.0 * av * av) / x) + 2.0;
    auto f = [&](double t) {
        const double e = x * (std::cosh(t) - 1.0);
        if (e > 740.0) return 0.0;
        return std::exp(-e) * std::cosh(av * t);
    };
    return integrator.integrate(f, 0.0, tmax, 1e-13);
}

// Asymptotic expansion of e^{x} K_v(x), truncated at the smallest term:
//   e^x K_v(x) ~ sqrt(pi/(2x)) [1 + sum_k prod_{j=1..k}(4v^2-(2j-1)^2)/(k!(8x)^k)]
double scaled_k_asymptotic(double v, double x) {
    const double mu = 4.0 * v * v;
    double sum = 1.0, term = 1.0, prev = std::numeric_limits<double>::max();
    for (int k = 1; k < 60; ++k) {
        const double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (8.0 * x * k);
        const double a = std::abs(term);
        if (a >= prev) break;  // divergent tail reached
        sum += term;
        prev = a;
        if (a < 1e-17 * std::abs(sum)) break;
    }
    return std::sqrt(kPi / (2.0 * x)) * sum;
}

bool is_half_integer(double v) {
    return std::abs(v - std::floor(v) - 0.5) < 1e-12;
}

bool is_integer(double v) {
    return std::abs(v - std::nearbyint(v)) < 1e-12;
}

// e^{x} K_{n+1/2}(x) closed form: sqrt(pi/(2x)) sum_{k=0..n} (n+k)!/(k!(n-k)!(2x)^k)
double scaled_k_half_integer(int n, double x) {
    double sum = 0.0, c = 1.0;  // c = (n+k)!/(k!(n-k)!) at k=0 is 1
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            c *= static_cast<double>((n + k) * (n - k + 1)) / k;
        }
        sum += c / std::pow(2.0 * x, k);
    }
    return std::sqrt(kPi / (2.0 * x)) * sum;
}

}  // namespace

double bessel_k_scaled(double order, double x) {
    if (!(x > 0.0)) {
        throw domain_error("bessel_k: requires x > 0");
    }
    const double v = std::abs(order);  // K_{-v} = K_v

    if (is_half_integer(v)) {
        return scaled_k_half_integer(static_cast<int>(std::floor(v)), x);
    }

    if (is_integer(v)) {
        const int n = static_cast<int>(std::nearbyint(v));
        double k0, k1;
        if (x <= 2.0) {
            const double ex = std::exp(x);
            k0 = k0_series(x) * ex;
            k1 = k1_series(x) * ex;
        } else if (x < 30.0) {
            k0 = scaled_k_quadrature(0.0, x);
            k1 = scaled_k_quadrature(1.0, x);
        } else {
            k0 = scaled_k_asymptotic(0.0, x);
            k1 = scaled_k_asymptotic(1.0, x);
        }
        if (n == 0) return k0;
        if (n == 1) return k1;
        // Upward recurrence (stable for K): K_{m+1} = K_{m-1} + (2m/x) K_m.
        double prev = k0, cur = k1;
        for (int m = 1; m < n; ++m) {
            const double next = prev + (2.0 * m / x) * cur;
            prev = cur;
            cur = next;
        }
        return cur;
    }

    // Arbitrary real order.
    if (x >= 30.0) {
        return scaled_k_asymptotic(v, x);
    }
    return scaled_k_quadrature(v, x);
}

double bessel_k(double order, double x) {
    if (!(x > 0.0)) {
        throw domain_error("bessel_k: requires x > 0");
    }
    if (x > 740.0) {
        return 0.0;  // e^{-x} below the representable exponential range
    }
    return bessel_k_scaled(order, x) * std::exp(-x);
}

}  // namespace twrelay
