#pragma once

#include "twrelay/channel.hpp"
#include "twrelay/distributions.hpp"

namespace twrelay {

// Provenance of a sum-rate number: fully closed-form, fully quadrature,
// or closed-form directional terms with a quadrature ratio term (hybrid).
enum class RateMethod { closed, quadrature, hybrid };

struct SumRateBreakdown {
    double i1 = 0.0;  // nats
    double i2 = 0.0;  // nats
    double i3 = 0.0;  // nats
    double rsum = 0.0;  // bits/s/Hz
    RateMethod method = RateMethod::quadrature;
};

// (2 / (3 ln 2)) * (i1 + i2 + 2*i3): the scaling that turns the three
// high-SNR log terms into bits/s/Hz.
double compose_rsum(double i1, double i2, double i3);

// The directional-term average E[ln Z] admits two printed readings of the
// same integral; both are implemented and must agree (the u-summed
// ln(z)/(1+z) kernel telescopes to z*ln z).
enum class I1Kernel { expectation, expanded };

// Averages of ln(g1*g2/(g1+2*g2)) and ln(g1*g2/(g2+2*g1)) by adaptive
// quadrature against the Z density.  Relative target 1e-6.
double i1_quadrature(const DensityParams& params,
                     I1Kernel kernel = I1Kernel::expectation);
double i2_quadrature(const DensityParams& params,
                     I1Kernel kernel = I1Kernel::expectation);

// Closed forms of the same averages via a double Mellin-Barnes integral.
// Valid on the region beta_k > alpha; at the boundary (gbar_i = 2*gbar_j)
// the (beta_k - alpha) powers blow up and a region_error is thrown so
// callers can fall back to quadrature.
double i1_closed(const DensityParams& params);
double i2_closed(const DensityParams& params);

// Average of ln(1 + T) against the T density, by adaptive quadrature.
double i3_quadrature(const DensityParams& params);

// Closed form of E[ln(1+T)] as a two-term contour-integral series; derived
// under symmetric relay links (gbar1 = gbar2, where eta = 0).  Asymmetric
// parameters raise region_error directing callers to i3_quadrature.
double i3_closed(const DensityParams& params);

// Average sum-rate at SNR rho for a scenario's mean powers.
// rsum_closed: closed-form i1/i2 (throws region_error on the boundary);
// i3 closed when symmetric, otherwise quadrature fallback tagged hybrid.
SumRateBreakdown rsum_closed(const ScenarioConfig& config, double rho);
// rsum_quadrature: all three terms by quadrature (any parameters).
SumRateBreakdown rsum_quadrature(const ScenarioConfig& config, double rho);
// Fallback ladder: closed first, quadrature when the closed form refuses.
SumRateBreakdown rsum_with_fallback(const ScenarioConfig& config, double rho);

}  // namespace twrelay
