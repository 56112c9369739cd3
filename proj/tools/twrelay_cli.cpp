// Command-line experiment runner: sweeps SNR for a relaying scenario and
// writes the sum-rate table as CSV (plus optional long-format plot data).
//
// Exit codes: 0 full success, 2 partial (some cells unavailable because a
// method refused its parameter region), 1 failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twrelay/errors.hpp"
#include "twrelay/experiment.hpp"

namespace {

struct CliSettings {
    std::string scenario = "symmetric";
    double omega0 = 1.0;
    double omega1 = 1.0;
    double omega2 = 1.0;
    std::string snr_range = "0:2:30";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 12345;
    std::string methods = "mc,closed,quadrature,oneway";
};

void apply_config_entry(CliSettings& settings, const std::string& key,
                        const std::string& value) {
    if (key == "scenario") {
        settings.scenario = value;
    } else if (key == "omega0") {
        settings.omega0 = std::stod(value);
    } else if (key == "omega1") {
        settings.omega1 = std::stod(value);
    } else if (key == "omega2") {
        settings.omega2 = std::stod(value);
    } else if (key == "snr_db") {
        settings.snr_range = value;
    } else if (key == "trials") {
        settings.trials = std::stoull(value);
    } else if (key == "seed") {
        settings.seed = std::stoull(value);
    } else if (key == "methods") {
        settings.methods = value;
    } else {
        throw twrelay::parameter_error("config: unknown key '" + key + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Two-way amplify-and-forward relay sum-rate experiment runner"};

    CliSettings flags;
    std::string out_path;
    std::string plot_path;
    std::string config_path;

    auto* scenario_opt =
        app.add_option("--scenario", flags.scenario,
                       "Scenario preset: symmetric, colinear, or custom")
            ->check(CLI::IsMember({"symmetric", "colinear", "custom"}));
    auto* omega0_opt = app.add_option(
        "--omega0", flags.omega0, "Direct-link mean power (custom scenario)");
    auto* omega1_opt = app.add_option(
        "--omega1", flags.omega1, "First relay-link mean power (custom)");
    auto* omega2_opt = app.add_option(
        "--omega2", flags.omega2, "Second relay-link mean power (custom)");
    auto* snr_opt = app.add_option("--snr-db", flags.snr_range,
                                   "SNR grid in dB as start:step:stop");
    auto* trials_opt =
        app.add_option("--trials", flags.trials, "Monte Carlo trials");
    auto* seed_opt = app.add_option("--seed", flags.seed, "Base RNG seed");
    auto* methods_opt = app.add_option(
        "--methods", flags.methods,
        "Comma list from mc, closed, quadrature, oneway");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--plot-data", plot_path,
                   "Optional long-format plot data path");
    app.add_option("--config", config_path,
                   "key=value config file; flags override file values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    }

    try {
        CliSettings settings;
        if (!config_path.empty()) {
            for (const auto& [key, value] :
                 twrelay::parse_config_file(config_path)) {
                apply_config_entry(settings, key, value);
            }
        }
        if (scenario_opt->count() > 0) settings.scenario = flags.scenario;
        if (omega0_opt->count() > 0) settings.omega0 = flags.omega0;
        if (omega1_opt->count() > 0) settings.omega1 = flags.omega1;
        if (omega2_opt->count() > 0) settings.omega2 = flags.omega2;
        if (snr_opt->count() > 0) settings.snr_range = flags.snr_range;
        if (trials_opt->count() > 0) settings.trials = flags.trials;
        if (seed_opt->count() > 0) settings.seed = flags.seed;
        if (methods_opt->count() > 0) settings.methods = flags.methods;

        const bool omegas_given = omega0_opt->count() > 0 ||
                                  omega1_opt->count() > 0 ||
                                  omega2_opt->count() > 0;
        twrelay::ScenarioConfig config;
        if (settings.scenario == "symmetric") {
            if (omegas_given) {
                throw twrelay::parameter_error(
                    "mean-power overrides require --scenario custom");
            }
            config = twrelay::ScenarioConfig::symmetric();
        } else if (settings.scenario == "colinear") {
            if (omegas_given) {
                throw twrelay::parameter_error(
                    "mean-power overrides require --scenario custom");
            }
            config = twrelay::ScenarioConfig::colinear();
        } else if (settings.scenario == "custom") {
            config.omega0 = settings.omega0;
            config.omega1 = settings.omega1;
            config.omega2 = settings.omega2;
        } else {
            throw twrelay::parameter_error("unknown scenario '" +
                                           settings.scenario + "'");
        }
        config.snr_grid_db = twrelay::parse_snr_range(settings.snr_range);
        config.trials = settings.trials;
        config.seed = settings.seed;
        config.validate();

        const twrelay::MethodSet methods =
            twrelay::parse_methods(settings.methods);

        const twrelay::ExperimentResult result = twrelay::run_experiment(
            config, methods, [](const std::string& message) {
                std::fprintf(stderr, "progress: %s\n", message.c_str());
            });

        if (out_path.empty()) {
            std::fputs(twrelay::format_csv(result).c_str(), stdout);
        } else {
            twrelay::emit_csv(result, out_path);
        }
        if (!plot_path.empty()) {
            twrelay::emit_plotdata(result, plot_path);
        }
        return result.complete ? 0 : 2;
    } catch (const std::exception& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 1;
    }
}
