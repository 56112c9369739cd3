#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "twrelay/rng.hpp"

namespace twrelay {

// One quasi-static draw of the three link gains together with the mean
// powers they were drawn from.  h0 is the direct source-to-source link,
// h1 and h2 the source-to-relay links; reciprocity means the same gain
// serves both directions of a link within a realization.
struct ChannelRealization {
    std::complex<double> h0;
    std::complex<double> h1;
    std::complex<double> h2;
    double omega0 = 1.0;
    double omega1 = 1.0;
    double omega2 = 1.0;
};

// Full experiment input: mean link powers, the SNR sweep, and the Monte
// Carlo budget.  SNR values are in dB on a strictly increasing grid.
struct ScenarioConfig {
    double omega0 = 1.0;
    double omega1 = 1.0;
    double omega2 = 1.0;
    std::vector<double> snr_grid_db = default_snr_grid();
    std::uint64_t trials = 100000;
    std::uint64_t seed = 12345;

    // Throws parameter_error unless all powers are positive and finite,
    // the grid is strictly increasing, and trials >= 1.
    void validate() const;

    static std::vector<double> default_snr_grid();  // 0:2:30 dB
    static ScenarioConfig symmetric();  // all mean powers 1
    static ScenarioConfig colinear();   // relay halfway: omega1 = omega2 = 16
};

// Mean power of a link of the given length under the exponential-decay
// path-loss model, normalized to 1 at unit distance.
double pathloss_omega(double distance, double exponent);

// Draws h_i ~ CN(0, omega_i), in the fixed order h0, h1, h2, from the
// caller's stream.  Deterministic per (seed, trial) by stream construction.
ChannelRealization sample_realization(const ScenarioConfig& config,
                                      Xoshiro256& stream);

// Instantaneous link SNRs gamma_i = 2 * rho * |h_i|^2; exponentially
// distributed with mean 2 * rho * omega_i under Rayleigh fading.
std::array<double, 3> sample_gamma_vars(const ChannelRealization& realization,
                                        double rho);

}  // namespace twrelay
