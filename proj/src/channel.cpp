#include "twrelay/channel.hpp"

#include <cmath>
#include <limits>

#include "twrelay/errors.hpp"

namespace twrelay {

void ScenarioConfig::validate() const {
    for (double omega : {omega0, omega1, omega2}) {
        if (!(omega > 0.0) || !std::isfinite(omega)) {
            throw parameter_error(
                "ScenarioConfig: mean powers must be positive and finite");
        }
    }
    if (snr_grid_db.empty()) {
        throw parameter_error("ScenarioConfig: SNR grid must be non-empty");
    }
    for (std::size_t i = 0; i < snr_grid_db.size(); ++i) {
        if (!std::isfinite(snr_grid_db[i])) {
            throw parameter_error("ScenarioConfig: SNR grid must be finite");
        }
        if (i > 0 && !(snr_grid_db[i] > snr_grid_db[i - 1])) {
            throw parameter_error(
                "ScenarioConfig: SNR grid must be strictly increasing");
        }
    }
    if (trials < 1) {
        throw parameter_error("ScenarioConfig: trials must be at least 1");
    }
}

std::vector<double> ScenarioConfig::default_snr_grid() {
    std::vector<double> grid;
    grid.reserve(16);
    for (int db = 0; db <= 30; db += 2) {
        grid.push_back(static_cast<double>(db));
    }
    return grid;
}

ScenarioConfig ScenarioConfig::symmetric() {
    ScenarioConfig config;
    config.omega0 = 1.0;
    config.omega1 = 1.0;
    config.omega2 = 1.0;
    return config;
}

ScenarioConfig ScenarioConfig::colinear() {
    ScenarioConfig config;
    config.omega0 = pathloss_omega(1.0, 4.0);
    config.omega1 = pathloss_omega(0.5, 4.0);
    config.omega2 = pathloss_omega(0.5, 4.0);
    return config;
}

double pathloss_omega(double distance, double exponent) {
    if (!(distance > 0.0)) {
        throw domain_error("pathloss_omega: distance must be positive");
    }
    if (!(exponent > 0.0)) {
        throw domain_error("pathloss_omega: exponent must be positive");
    }
    return std::pow(distance, -exponent);
}

ChannelRealization sample_realization(const ScenarioConfig& config,
                                      Xoshiro256& stream) {
    ChannelRealization realization;
    realization.omega0 = config.omega0;
    realization.omega1 = config.omega1;
    realization.omega2 = config.omega2;
    realization.h0 = stream.next_complex_normal(config.omega0);
    realization.h1 = stream.next_complex_normal(config.omega1);
    realization.h2 = stream.next_complex_normal(config.omega2);
    return realization;
}

std::array<double, 3> sample_gamma_vars(const ChannelRealization& realization,
                                        double rho) {
    if (!(rho > 0.0)) {
        throw domain_error("sample_gamma_vars: rho must be positive");
    }
    return {2.0 * rho * std::norm(realization.h0),
            2.0 * rho * std::norm(realization.h1),
            2.0 * rho * std::norm(realization.h2)};
}

}  // namespace twrelay
