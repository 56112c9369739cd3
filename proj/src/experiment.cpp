#include "twrelay/experiment.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "twrelay/errors.hpp"

namespace twrelay {
namespace {

std::string format_cell(const CellValue& cell) {
    if (!cell.available) return {};
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", cell.value);
    return buf;
}

std::string format_value(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

constexpr const char* kCsvHeader =
    "snr_db,mc_mean,mc_stderr,closed_form,quadrature,oneway_mean,"
    "oneway_stderr,gain";

std::string trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end &&
           std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin &&
           std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return text.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw parameter_error(what + ": cannot parse number from '" + text +
                              "'");
    }
    if (consumed != text.size()) {
        throw parameter_error(what + ": trailing characters in '" + text +
                              "'");
    }
    return value;
}

CellValue parse_cell(const std::string& text) {
    CellValue cell;
    if (text.empty()) return cell;
    cell.value = parse_double(text, "csv cell");
    cell.available = true;
    return cell;
}

void write_file(const std::string& path, const std::string& contents,
                const char* what) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error(std::string(what) + ": cannot open '" +
                                 path + "' for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw std::runtime_error(std::string(what) + ": write failed for '" +
                                 path + "'");
    }
}

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(std::string(what) + ": cannot open '" +
                                 path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

ExperimentResult run_experiment(const ScenarioConfig& config,
                                const MethodSet& methods,
                                const ProgressFn& progress) {
    config.validate();
    if (!methods.any()) {
        throw parameter_error(
            "run_experiment: at least one method must be selected");
    }
    ExperimentResult result;
    result.rows.reserve(config.snr_grid_db.size());
    for (double snr_db : config.snr_grid_db) {
        const double rho = std::pow(10.0, snr_db / 10.0);
        ExperimentRow row;
        row.snr_db = snr_db;
        if (methods.mc) {
            const SumRateEstimate estimate =
                monte_carlo_sumrate(config, rho, GainMode::exact);
            row.mc_mean = {estimate.mean, true};
            row.mc_stderr = {estimate.std_error, true};
        }
        if (methods.oneway) {
            const SumRateEstimate estimate =
                oneway_baseline_sumrate(config, rho);
            row.oneway_mean = {estimate.mean, true};
            row.oneway_stderr = {estimate.std_error, true};
        }
        if (methods.closed) {
            try {
                row.closed_form = {rsum_closed(config, rho).rsum, true};
            } catch (const region_error&) {
                result.complete = false;
            } catch (const convergence_error&) {
                result.complete = false;
            }
        }
        if (methods.quadrature) {
            try {
                row.quadrature = {rsum_quadrature(config, rho).rsum, true};
            } catch (const convergence_error&) {
                result.complete = false;
            }
        }
        if (row.mc_mean.available && row.oneway_mean.available) {
            row.gain = {row.mc_mean.value - row.oneway_mean.value, true};
        }
        result.rows.push_back(row);
        if (progress) {
            progress("snr_db=" + format_value(snr_db) + " done");
        }
    }
    return result;
}

std::string format_csv(const ExperimentResult& result) {
    std::string text = kCsvHeader;
    text += '\n';
    for (const ExperimentRow& row : result.rows) {
        text += format_value(row.snr_db);
        for (const CellValue* cell :
             {&row.mc_mean, &row.mc_stderr, &row.closed_form, &row.quadrature,
              &row.oneway_mean, &row.oneway_stderr, &row.gain}) {
            text += ',';
            text += format_cell(*cell);
        }
        text += '\n';
    }
    return text;
}

void emit_csv(const ExperimentResult& result, const std::string& path) {
    write_file(path, format_csv(result), "emit_csv");
}

std::string format_plotdata(const ExperimentResult& result) {
    std::string text = "series,snr_db,value\n";
    const struct {
        const char* name;
        const CellValue ExperimentRow::* cell;
    } series[] = {
        {"mc_proposed", &ExperimentRow::mc_mean},
        {"analytic_proposed", &ExperimentRow::closed_form},
        {"mc_oneway", &ExperimentRow::oneway_mean},
        {"gain", &ExperimentRow::gain},
    };
    for (const auto& entry : series) {
        for (const ExperimentRow& row : result.rows) {
            const CellValue& cell = row.*(entry.cell);
            if (!cell.available) continue;
            text += entry.name;
            text += ',';
            text += format_value(row.snr_db);
            text += ',';
            text += format_value(cell.value);
            text += '\n';
        }
    }
    return text;
}

void emit_plotdata(const ExperimentResult& result, const std::string& path) {
    write_file(path, format_plotdata(result), "emit_plotdata");
}

ExperimentResult parse_csv_text(const std::string& text) {
    std::vector<std::string> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.front() != kCsvHeader) {
        throw parameter_error("parse_csv: missing or malformed header");
    }
    ExperimentResult result;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::vector<std::string> fields = split(lines[i], ',');
        if (fields.size() != 8) {
            throw parameter_error("parse_csv: expected 8 fields, got " +
                                  std::to_string(fields.size()));
        }
        ExperimentRow row;
        row.snr_db = parse_double(fields[0], "csv snr_db");
        row.mc_mean = parse_cell(fields[1]);
        row.mc_stderr = parse_cell(fields[2]);
        row.closed_form = parse_cell(fields[3]);
        row.quadrature = parse_cell(fields[4]);
        row.oneway_mean = parse_cell(fields[5]);
        row.oneway_stderr = parse_cell(fields[6]);
        row.gain = parse_cell(fields[7]);
        result.rows.push_back(row);
    }
    return result;
}

ExperimentResult parse_csv(const std::string& path) {
    return parse_csv_text(read_file(path, "parse_csv"));
}

std::vector<std::pair<std::string, std::string>> parse_config_text(
    const std::string& text) {
    std::vector<std::pair<std::string, std::string>> entries;
    for (const std::string& raw_line : split(text, '\n')) {
        const std::string line = trim(raw_line);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw parameter_error("config: expected key=value, got '" + line +
                                  "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw parameter_error("config: empty key in '" + line + "'");
        }
        entries.emplace_back(key, value);
    }
    return entries;
}

std::vector<std::pair<std::string, std::string>> parse_config_file(
    const std::string& path) {
    return parse_config_text(read_file(path, "parse_config"));
}

std::vector<double> parse_snr_range(const std::string& text) {
    const std::vector<std::string> parts = split(text, ':');
    if (parts.size() == 1) {
        return {parse_double(trim(parts[0]), "snr range")};
    }
    if (parts.size() != 3) {
        throw parameter_error(
            "snr range: expected start:step:stop or a single value");
    }
    const double start = parse_double(trim(parts[0]), "snr range start");
    const double step = parse_double(trim(parts[1]), "snr range step");
    const double stop = parse_double(trim(parts[2]), "snr range stop");
    if (!(step > 0.0)) {
        throw parameter_error("snr range: step must be positive");
    }
    if (stop < start) {
        throw parameter_error("snr range: stop must be at least start");
    }
    std::vector<double> grid;
    const double slack = 1e-9 * std::max(1.0, std::abs(step));
    for (int k = 0;; ++k) {
        const double value = start + k * step;
        if (value > stop + slack) break;
        grid.push_back(value);
    }
    return grid;
}

MethodSet parse_methods(const std::string& text) {
    MethodSet methods;
    methods.mc = methods.closed = methods.quadrature = methods.oneway = false;
    bool any = false;
    for (const std::string& raw : split(text, ',')) {
        const std::string name = trim(raw);
        if (name.empty()) continue;
        if (name == "mc") {
            methods.mc = true;
        } else if (name == "closed") {
            methods.closed = true;
        } else if (name == "quadrature") {
            methods.quadrature = true;
        } else if (name == "oneway") {
            methods.oneway = true;
        } else {
            throw parameter_error("methods: unknown method '" + name + "'");
        }
        any = true;
    }
    if (!any) {
        throw parameter_error("methods: at least one method required");
    }
    return methods;
}

}  // namespace twrelay
