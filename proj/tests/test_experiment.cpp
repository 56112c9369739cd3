#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "twrelay/errors.hpp"
#include "twrelay/experiment.hpp"

using twrelay::ExperimentResult;
using twrelay::MethodSet;
using twrelay::ScenarioConfig;
using twrelay::format_csv;
using twrelay::format_plotdata;
using twrelay::parse_config_text;
using twrelay::parse_csv_text;
using twrelay::parse_methods;
using twrelay::parse_snr_range;
using twrelay::run_experiment;

namespace {

const char* kHeader =
    "snr_db,mc_mean,mc_stderr,closed_form,quadrature,oneway_mean,"
    "oneway_stderr,gain";

ScenarioConfig small_config() {
    ScenarioConfig cfg = ScenarioConfig::symmetric();
    cfg.snr_grid_db = {10.0, 15.0};
    cfg.trials = 2000;
    return cfg;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("full sweep populates every requested column") {
    const ExperimentResult r = run_experiment(small_config(), MethodSet{});
    REQUIRE(r.rows.size() == 2);
    CHECK(r.complete);
    for (const auto& row : r.rows) {
        CHECK(row.mc_mean.available);
        CHECK(row.mc_stderr.available);
        CHECK(row.closed_form.available);
        CHECK(row.quadrature.available);
        CHECK(row.oneway_mean.available);
        CHECK(row.oneway_stderr.available);
        CHECK(row.gain.available);
        CHECK(std::isfinite(row.mc_mean.value));
        CHECK(row.mc_stderr.value > 0.0);
        CHECK(row.gain.value ==
              doctest::Approx(row.mc_mean.value - row.oneway_mean.value)
                  .epsilon(1e-15));
        // Two-way Monte Carlo and the analytic forms should be in the same
        // ballpark even at this small trial count.
        CHECK(row.mc_mean.value ==
              doctest::Approx(row.quadrature.value).epsilon(0.15));
    }
    CHECK(r.rows[0].snr_db == doctest::Approx(10.0));
    CHECK(r.rows[1].snr_db == doctest::Approx(15.0));
    CHECK(r.rows[0].mc_mean.value < r.rows[1].mc_mean.value);
}

TEST_CASE("method subsets leave the other columns unavailable") {
    MethodSet only_mc;
    only_mc.closed = false;
    only_mc.quadrature = false;
    only_mc.oneway = false;
    const ExperimentResult r = run_experiment(small_config(), only_mc);
    CHECK(r.complete);
    for (const auto& row : r.rows) {
        CHECK(row.mc_mean.available);
        CHECK_FALSE(row.closed_form.available);
        CHECK_FALSE(row.quadrature.available);
        CHECK_FALSE(row.oneway_mean.available);
        CHECK_FALSE(row.gain.available);  // needs both mc and oneway
    }

    MethodSet none;
    none.mc = none.closed = none.quadrature = none.oneway = false;
    CHECK_THROWS_AS((void)run_experiment(small_config(), none),
                    twrelay::parameter_error);
}

TEST_CASE("closed-form refusals yield unavailable cells, not aborts") {
    ScenarioConfig cfg = small_config();
    cfg.omega1 = 2.0;  // sits exactly on the refused expansion boundary
    const ExperimentResult r = run_experiment(cfg, MethodSet{});
    CHECK_FALSE(r.complete);
    for (const auto& row : r.rows) {
        CHECK_FALSE(row.closed_form.available);
        CHECK(row.quadrature.available);  // quadrature column unaffected
        CHECK(row.mc_mean.available);
    }
    // The CSV leaves those cells empty.
    const auto lines = split_lines(format_csv(r));
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        // closed_form is the fourth field.
        std::size_t start = 0;
        for (int commas = 0; commas < 3; ++commas) {
            start = lines[i].find(',', start) + 1;
        }
        CHECK(lines[i][start] == ',');
    }
}

TEST_CASE("progress callback fires per grid point") {
    std::vector<std::string> notes;
    (void)run_experiment(small_config(), MethodSet{},
                         [&](const std::string& s) { notes.push_back(s); });
    CHECK(notes.size() >= 2);  // at least one per SNR point
}

TEST_CASE("CSV contract: header, layout, determinism") {
    const ExperimentResult r = run_experiment(small_config(), MethodSet{});
    const std::string csv = format_csv(r);
    const auto lines = split_lines(csv);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == kHeader);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');

    // Re-running the identical experiment reproduces the bytes.
    const ExperimentResult again = run_experiment(small_config(), MethodSet{});
    CHECK(format_csv(again) == csv);

    // Empty grid: header only.
    ExperimentResult empty;
    CHECK(format_csv(empty) == std::string(kHeader) + "\n");
}

TEST_CASE("CSV round-trip preserves every populated cell") {
    const ExperimentResult r = run_experiment(small_config(), MethodSet{});
    const std::string csv = format_csv(r);
    const ExperimentResult parsed = parse_csv_text(csv);
    REQUIRE(parsed.rows.size() == r.rows.size());
    // 9-significant-digit decimal is print-stable: re-emitting reproduces
    // the same bytes.
    CHECK(format_csv(parsed) == csv);

    // Unavailable cells survive the round trip as unavailable.
    ScenarioConfig cfg = small_config();
    cfg.omega1 = 2.0;
    const ExperimentResult refused = run_experiment(cfg, MethodSet{});
    const ExperimentResult reparsed = parse_csv_text(format_csv(refused));
    for (const auto& row : reparsed.rows) {
        CHECK_FALSE(row.closed_form.available);
        CHECK(row.quadrature.available);
    }
    CHECK(format_csv(reparsed) == format_csv(refused));
}

TEST_CASE("CSV parser rejects malformed input") {
    CHECK_THROWS_AS((void)parse_csv_text("wrong,header\n1,2\n"),
                    twrelay::parameter_error);
    CHECK_THROWS_AS(
        (void)parse_csv_text(std::string(kHeader) + "\n1,2,3\n"),
        twrelay::parameter_error);
    CHECK_THROWS_AS(
        (void)parse_csv_text(std::string(kHeader) + "\nx,,,,,,,\n"),
        twrelay::parameter_error);
    // Header alone parses to an empty result.
    const ExperimentResult empty =
        parse_csv_text(std::string(kHeader) + "\n");
    CHECK(empty.rows.empty());
}

TEST_CASE("plot table: series-major long format") {
    const ExperimentResult r = run_experiment(small_config(), MethodSet{});
    const auto lines = split_lines(format_plotdata(r));
    REQUIRE(lines.size() == 1 + 4 * r.rows.size());
    CHECK(lines[0] == "series,snr_db,value");
    // Series blocks in fixed order, each covering the grid in order.
    CHECK(lines[1].rfind("mc_proposed,10,", 0) == 0);
    CHECK(lines[2].rfind("mc_proposed,15,", 0) == 0);
    CHECK(lines[3].rfind("analytic_proposed,10,", 0) == 0);
    CHECK(lines[5].rfind("mc_oneway,10,", 0) == 0);
    CHECK(lines[7].rfind("gain,10,", 0) == 0);

    // Unavailable points are skipped entirely.
    ScenarioConfig cfg = small_config();
    cfg.omega1 = 2.0;
    const ExperimentResult refused = run_experiment(cfg, MethodSet{});
    const std::string plot = format_plotdata(refused);
    CHECK(plot.find("analytic_proposed") == std::string::npos);
}

TEST_CASE("config text parsing") {
    const auto entries = parse_config_text(
        "# comment line\n"
        "scenario = symmetric\n"
        "\n"
        "trials=500\n"
        "  seed =  42   \n"
        "trials=900\n");
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].first == "scenario");
    CHECK(entries[0].second == "symmetric");
    CHECK(entries[1].first == "trials");
    CHECK(entries[1].second == "500");
    CHECK(entries[2].first == "seed");
    CHECK(entries[2].second == "42");
    // Later duplicates are preserved in order so the consumer's
    // last-wins application sees 900.
    CHECK(entries[3].first == "trials");
    CHECK(entries[3].second == "900");

    CHECK_THROWS_AS((void)parse_config_text("novalue\n"),
                    twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_config_text("=value\n"),
                    twrelay::parameter_error);
    CHECK(parse_config_text("").empty());
    CHECK(parse_config_text("# only comments\n\n").empty());
}

TEST_CASE("SNR range parsing") {
    const std::vector<double> sweep = parse_snr_range("0:5:30");
    REQUIRE(sweep.size() == 7);
    CHECK(sweep.front() == doctest::Approx(0.0));
    CHECK(sweep.back() == doctest::Approx(30.0));

    const std::vector<double> single = parse_snr_range("12.5");
    REQUIRE(single.size() == 1);
    CHECK(single[0] == doctest::Approx(12.5));

    // Inclusive endpoint despite accumulated floating-point drift.
    const std::vector<double> fine = parse_snr_range("0:0.1:1");
    CHECK(fine.size() == 11);
    CHECK(fine.back() == doctest::Approx(1.0));

    const std::vector<double> negative = parse_snr_range("-10:5:0");
    REQUIRE(negative.size() == 3);
    CHECK(negative[0] == doctest::Approx(-10.0));

    CHECK_THROWS_AS((void)parse_snr_range(""), twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_snr_range("abc"), twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_snr_range("0:0:10"), twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_snr_range("0:-1:10"),
                    twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_snr_range("10:1:0"), twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_snr_range("1:2"), twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_snr_range("1:2:3:4"),
                    twrelay::parameter_error);
}

TEST_CASE("method list parsing") {
    const MethodSet all = parse_methods("mc,closed,quadrature,oneway");
    CHECK(all.mc);
    CHECK(all.closed);
    CHECK(all.quadrature);
    CHECK(all.oneway);

    const MethodSet two = parse_methods("mc,oneway");
    CHECK(two.mc);
    CHECK_FALSE(two.closed);
    CHECK_FALSE(two.quadrature);
    CHECK(two.oneway);

    const MethodSet padded = parse_methods(" closed , quadrature ");
    CHECK_FALSE(padded.mc);
    CHECK(padded.closed);
    CHECK(padded.quadrature);

    CHECK_THROWS_AS((void)parse_methods(""), twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_methods("mc,bogus"),
                    twrelay::parameter_error);
    CHECK_THROWS_AS((void)parse_methods(",,"), twrelay::parameter_error);
}
