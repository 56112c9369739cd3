#include "twrelay/sumrate.hpp"

#include <algorithm>
#include <cmath>

#include "twrelay/bessel.hpp"
#include "twrelay/bivariate.hpp"
#include "twrelay/errors.hpp"
#include "twrelay/mellin.hpp"
#include "twrelay/quadrature.hpp"

namespace twrelay {
namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kPi = 3.14159265358979323846;

// E[ln V] for a Z-family variable with constants (alpha, beta): the integral
// is split at 1 with a log substitution on (0, 1] to tame the ln-singularity.
double expected_log_z(double alpha, double beta) {
    auto pdf = [&](double v) {
        const double x = alpha * v;
        const double envelope = alpha * v * std::exp(-(beta + alpha) * v);
        if (envelope == 0.0) return 0.0;
        return envelope * (alpha * bessel_k_scaled(0.0, x) +
                           beta * bessel_k_scaled(1.0, x));
    };
    const double lower = integrate_to_infinity(
        [&](double x) {
            const double z = std::exp(-x);
            return -x * pdf(z) * z;
        },
        6.0);
    const double tail_scale = std::max(1.0, 4.0 / (alpha + beta));
    const double upper = integrate_to_infinity(
        [&](double t) {
            const double z = 1.0 + t;
            return std::log(z) * pdf(z);
        },
        tail_scale);
    return lower + upper;
}

// The literal expanded reading: sum over (u, v) of
// A_v * Int ln(z)/(1+z) * z^u * exp(-beta*z) * K_v(alpha*z) dz.
double expected_log_z_expanded(double alpha, double beta,
                                    const double a_weight[2]) {
    double total = 0.0;
    for (int u = 1; u <= 2; ++u) {
        for (int v = 0; v <= 1; ++v) {
            auto integrand = [&, u, v](double z) {
                const double envelope =
                    std::pow(z, u) * std::exp(-(beta + alpha) * z);
                if (envelope == 0.0 || z == 0.0) return 0.0;
                return std::log(z) / (1.0 + z) * envelope *
                       bessel_k_scaled(static_cast<double>(v), alpha * z);
            };
            const double lower = integrate_to_infinity(
                [&](double x) {
                    const double z = std::exp(-x);
                    return integrand(z) * z;
                },
                6.0);
            const double tail_scale = std::max(1.0, 4.0 / (alpha + beta));
            const double upper = integrate_to_infinity(
                [&](double t) { return integrand(1.0 + t); }, tail_scale);
            total += a_weight[v] * (lower + upper);
        }
    }
    return total;
}

double directional_quadrature(const DensityParams& params, ZOrdering ordering,
                              I1Kernel kernel) {
    const double alpha = params.alpha_z;
    const double beta = params.beta(ordering);
    if (kernel == I1Kernel::expectation) {
        return expected_log_z(alpha, beta);
    }
    const double a_weight[2] = {params.a_weight(0, ordering),
                                params.a_weight(1, ordering)};
    return expected_log_z_expanded(alpha, beta, a_weight);
}

// Closed form of E[ln V]: -pi^(3/2) * sum over u in {1,2}, v in {0,1} of
// A_v * (beta-alpha)^(-u-1) * H[u,v](1/(beta-alpha), 2*alpha/(beta-alpha))
// where H is the double Mellin-Barnes integral below.
double directional_closed(const DensityParams& params, ZOrdering ordering) {
    const double alpha = params.alpha_z;
    const double beta = params.beta(ordering);
    const double diff = beta - alpha;
    if (!(diff > 1e-9 * (beta + alpha))) {
        throw region_error(
            "directional closed form: beta must exceed alpha "
            "(gbar_i = 2*gbar_j boundary); use the quadrature form");
    }
    const double z1 = 1.0 / diff;
    const double z2 = 2.0 * alpha / diff;

    double total = 0.0;
    for (int v = 0; v <= 1; ++v) {
        BivariateFoxHSpec spec;
        spec.factor1 = make_meijer_spec(2, 2, {0.0, 0.0, 0.5},
                                        {0.0, 0.0, 0.5});
        spec.factor2 = make_meijer_spec(
            2, 0, {0.5}, {static_cast<double>(v), static_cast<double>(-v)});
        const double weight = params.a_weight(v, ordering);
        for (int u = 1; u <= 2; ++u) {
            spec.joint = {{u + 1.0, 1.0, 1.0}};
            const double h = bivariate_fox_h(spec, z1, z2, 1e-7);
            total += weight * std::pow(diff, -(u + 1.0)) * h;
        }
    }
    return -std::pow(kPi, 1.5) * total;
}

bool symmetric_links(const DensityParams& params) {
    return std::abs(params.gbar1 - params.gbar2) <=
           1e-9 * (params.gbar1 + params.gbar2);
}

DensityParams params_for(const ScenarioConfig& config, double rho) {
    return DensityParams(2.0 * rho * config.omega0, 2.0 * rho * config.omega1,
                       2.0 * rho * config.omega2);
}

}  // namespace

double compose_rsum(double i1, double i2, double i3) {
    return (2.0 / (3.0 * kLn2)) * (i1 + i2 + 2.0 * i3);
}

double i1_quadrature(const DensityParams& params, I1Kernel kernel) {
    return directional_quadrature(params, ZOrdering::z12, kernel);
}

double i2_quadrature(const DensityParams& params, I1Kernel kernel) {
    return directional_quadrature(params, ZOrdering::z21, kernel);
}

double i1_closed(const DensityParams& params) {
    return directional_closed(params, ZOrdering::z12);
}

double i2_closed(const DensityParams& params) {
    return directional_closed(params, ZOrdering::z21);
}

double i3_quadrature(const DensityParams& params) {
    const double scale_hint = std::max(10.0, 10.0 * params.zeta);
    return integrate_to_infinity(
        [&](double t) {
            if (t == 0.0) return 0.0;
            return std::log1p(t) * pdf_T(t, params);
        },
        scale_hint);
}

double i3_closed(const DensityParams& params) {
    if (!symmetric_links(params)) {
        throw region_error(
            "i3 closed form: derived for symmetric relay links "
            "(gbar1 = gbar2); use i3_quadrature");
    }
    const double zeta = params.zeta;
    const double gamma_3_5 = std::tgamma(3.5);
    const double weights[2] = {params.xi0, params.xi1};

    double total = 0.0;
    for (int n = 0; n <= 1; ++n) {
        FoxHSpec spec;
        spec.m = 4;
        spec.n = 2;
        spec.upper = {{1.0, 1.0}, {1.0, 1.0}, {2.5, 1.0}, {1.0, 1.0}};
        spec.lower = {{2.0 + n, 1.0}, {2.0 - n, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
        const double coef = weights[n] * std::pow(zeta, -2.0 - n) *
                            gamma_3_5 /
                            (std::tgamma(3.0 + n) * std::tgamma(3.0 - n));
        total += coef * fox_h(spec, zeta, 1e-9);
    }
    return total;
}

SumRateBreakdown rsum_closed(const ScenarioConfig& config, double rho) {
    config.validate();
    if (!(rho > 0.0)) {
        throw domain_error("rsum_closed: rho must be positive");
    }
    const DensityParams params = params_for(config, rho);
    SumRateBreakdown breakdown;
    breakdown.i1 = i1_closed(params);
    breakdown.i2 = i2_closed(params);
    if (symmetric_links(params)) {
        breakdown.i3 = i3_closed(params);
        breakdown.method = RateMethod::closed;
    } else {
        breakdown.i3 = i3_quadrature(params);
        breakdown.method = RateMethod::hybrid;
    }
    breakdown.rsum = compose_rsum(breakdown.i1, breakdown.i2, breakdown.i3);
    return breakdown;
}

SumRateBreakdown rsum_quadrature(const ScenarioConfig& config, double rho) {
    config.validate();
    if (!(rho > 0.0)) {
        throw domain_error("rsum_quadrature: rho must be positive");
    }
    const DensityParams params = params_for(config, rho);
    SumRateBreakdown breakdown;
    breakdown.i1 = i1_quadrature(params);
    breakdown.i2 = i2_quadrature(params);
    breakdown.i3 = i3_quadrature(params);
    breakdown.method = RateMethod::quadrature;
    breakdown.rsum = compose_rsum(breakdown.i1, breakdown.i2, breakdown.i3);
    return breakdown;
}

SumRateBreakdown rsum_with_fallback(const ScenarioConfig& config, double rho) {
    try {
        return rsum_closed(config, rho);
    } catch (const region_error&) {
    } catch (const convergence_error&) {
    }
    return rsum_quadrature(config, rho);
}

}  // namespace twrelay
