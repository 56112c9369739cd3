#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "twrelay/channel.hpp"
#include "twrelay/protocol.hpp"
#include "twrelay/sumrate.hpp"

namespace twrelay {

// One output cell: either a finite value produced by exactly one method,
// or explicitly unavailable (the method refused this region).
struct CellValue {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool available = false;
};

struct ExperimentRow {
    double snr_db = 0.0;
    CellValue mc_mean;
    CellValue mc_stderr;
    CellValue closed_form;
    CellValue quadrature;
    CellValue oneway_mean;
    CellValue oneway_stderr;
    CellValue gain;  // mc_mean - oneway_mean when both are available
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;  // ascending snr_db

    // True when every cell of every requested method is available.
    bool complete = true;
};

struct MethodSet {
    bool mc = true;
    bool closed = true;
    bool quadrature = true;
    bool oneway = true;

    bool any() const { return mc || closed || quadrature || oneway; }
};

using ProgressFn = std::function<void(const std::string&)>;

// Sweeps the config's SNR grid, filling the columns selected in `methods`.
// Region refusals of the closed form are recorded as unavailable cells and
// never abort the sweep.  Deterministic per (config, seed).
ExperimentResult run_experiment(const ScenarioConfig& config,
                                const MethodSet& methods,
                                const ProgressFn& progress = {});

// CSV with the fixed header
// snr_db,mc_mean,mc_stderr,closed_form,quadrature,oneway_mean,oneway_stderr,gain
// 9 significant digits, LF line endings, empty fields for unavailable cells.
std::string format_csv(const ExperimentResult& result);
void emit_csv(const ExperimentResult& result, const std::string& path);

// Long-format table `series,snr_db,value` with the four plot series
// (mc_proposed, analytic_proposed, mc_oneway, gain); unavailable points
// are skipped.
std::string format_plotdata(const ExperimentResult& result);
void emit_plotdata(const ExperimentResult& result, const std::string& path);

// Inverse of format_csv/emit_csv (for the serialization round-trip check).
ExperimentResult parse_csv_text(const std::string& text);
ExperimentResult parse_csv(const std::string& path);

// key=value configuration text: '#' comments and blank lines ignored,
// later duplicates override earlier ones.  Order is preserved.
std::vector<std::pair<std::string, std::string>> parse_config_text(
    const std::string& text);
std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path);

// "start:step:stop" (inclusive, step > 0) or a single value.
std::vector<double> parse_snr_range(const std::string& text);

// Comma-separated subset of {mc, closed, quadrature, oneway}.
MethodSet parse_methods(const std::string& text);

}  // namespace twrelay
