// Integration gate: one self-contained check per acceptance criterion,
// each printing exactly one "criterion N: PASS/FAIL (time) -- detail" line.
// Tolerances are pinned here, in code.  A criterion that exceeds its wall
// budget fails regardless of its checks.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "twrelay/bessel.hpp"
#include "twrelay/channel.hpp"
#include "twrelay/distributions.hpp"
#include "twrelay/errors.hpp"
#include "twrelay/experiment.hpp"
#include "twrelay/mellin.hpp"
#include "twrelay/protocol.hpp"
#include "twrelay/quadrature.hpp"
#include "twrelay/rng.hpp"
#include "twrelay/sumrate.hpp"

namespace {

using namespace twrelay;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// Wall budgets in seconds per criterion (0 = unbudgeted).
constexpr double kBudgetSeconds[10] = {5, 5, 30, 60, 30, 300, 600, 600, 600, 0};

constexpr double kKs1PctScale = 1.62762;  // asymptotic 1% critical value

double ks_against_cdf(std::vector<double>& draws,
                      const std::function<double(double)>& cdf) {
    std::sort(draws.begin(), draws.end());
    const double n = static_cast<double>(draws.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < draws.size(); ++i) {
        const double c = cdf(draws[i]);
        ks = std::max({ks, std::abs(c - static_cast<double>(i) / n),
                       std::abs(c - static_cast<double>(i + 1) / n)});
    }
    return ks;
}

// --- criterion 1: determinant and scalar instantaneous rates agree -------

Outcome criterion_determinant_identity() {
    const ScenarioConfig cfg = ScenarioConfig::symmetric();
    const double rhos[3] = {1.0, 10.0, 1000.0};
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        Xoshiro256 stream(cfg.seed, t);
        const ChannelRealization r = sample_realization(cfg, stream);
        const double rho = rhos[t % 3];
        const double det = instantaneous_sumrate_det(r, rho,
                                                     GainMode::high_snr);
        const double scalar = instantaneous_sumrate_scalar(r, rho);
        worst = std::max(worst,
                         std::abs(det - scalar) / (1.0 + std::abs(scalar)));
    }
    return {worst <= 1e-10,
            fmt("max relative gap %.3g over 10000 realizations (gate 1e-10)",
                worst)};
}

// --- criterion 2: self-interference cancellation is exact ---------------

Outcome criterion_cancellation_residual() {
    const ScenarioConfig cfg = ScenarioConfig::symmetric();
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 10000; ++t) {
        Xoshiro256 stream(cfg.seed + 1, t);
        const ChannelRealization r = sample_realization(cfg, stream);
        const std::array<Complex, 4> symbols = {
            stream.next_complex_normal(1.0), stream.next_complex_normal(1.0),
            stream.next_complex_normal(1.0), stream.next_complex_normal(1.0)};
        const double rho = 10.0;
        const PhaseSignals ps = run_three_phase(r, symbols, rho, stream, true);
        const EffectiveSignals eff = cancel_self_interference(ps, r, ps.gain);
        const Complex hnew = ps.gain * r.h1 * r.h2;
        for (int k = 0; k < 2; ++k) {
            const Complex want1 = hnew * ps.x_code.row(0)[k] +
                                  r.h0 * ps.x_code.row(1)[k] +
                                  ps.gain * r.h1 * ps.relay_noise[k] +
                                  ps.source1_noise[k];
            const Complex want2 = hnew * ps.s_code.row(0)[k] +
                                  r.h0 * ps.s_code.row(1)[k] +
                                  ps.gain * r.h2 * ps.relay_noise[k] +
                                  ps.source2_noise[k];
            worst = std::max({worst, std::abs(eff.source1_eff[k] - want1),
                              std::abs(eff.source2_eff[k] - want2)});
        }
    }
    return {worst <= 1e-12,
            fmt("max residual %.3g over 10000 draws, both sources "
                "(gate 1e-12)",
                worst)};
}

// --- criterion 3: composite-ratio density normalizes and fits -----------

Outcome criterion_ratio_density_fit() {
    const struct {
        double g1, g2;
        const char* label;
    } sets[] = {{20.0, 20.0, "symmetric"},
                {40.0, 10.0, "4:1"},
                {2000.0, 2000.0, "high-snr"}};
    const int n = 100000;
    const double ks_gate = kKs1PctScale / std::sqrt(static_cast<double>(n));
    double worst_norm = 0.0, worst_ks = 0.0;
    bool pass = true;
    std::uint64_t stream_id = 100;
    for (const auto& s : sets) {
        const DensityParams p(1.0, s.g1, s.g2);
        const double scale = 1.0 / (p.beta1 + p.alpha_z);
        const double norm = integrate_to_infinity(
            [&](double z) { return pdf_Z(z, p, ZOrdering::z12); }, scale,
            1e-9);
        worst_norm = std::max(worst_norm, std::abs(norm - 1.0));
        if (std::abs(norm - 1.0) > 1e-6) pass = false;

        Xoshiro256 gen(20260814, stream_id++);
        std::vector<double> draws(n);
        for (int i = 0; i < n; ++i) {
            const double g1 = sample_exponential(gen, s.g1);
            const double g2 = sample_exponential(gen, s.g2);
            draws[i] = g1 * g2 / (g1 + 2.0 * g2);
        }
        const double ks = ks_against_cdf(draws, [&](double z) {
            return z <= 0.0 ? 0.0 : cdf_Z(z, p, ZOrdering::z12);
        });
        worst_ks = std::max(worst_ks, ks);
        if (ks >= ks_gate) pass = false;
    }
    return {pass,
            fmt("3 parameter sets: max |norm-1| %.3g (gate 1e-6), max KS "
                "%.4g (gate %.4g)",
                worst_norm, worst_ks, ks_gate)};
}

// --- criterion 4: interference-ratio density, resolved reading ----------

Outcome criterion_interference_density_fit() {
    const DensityParams p(20.0, 20.0, 20.0);
    const double norm = integrate_to_infinity(
        [&](double t) { return pdf_T(t, p); }, std::max(10.0, p.zeta), 1e-9,
        1e-11);
    const bool norm_ok = std::abs(norm - 1.0) <= 1e-5;

    const int n = 100000;
    Xoshiro256 gen(20260814, 200);
    std::vector<double> draws(n);
    for (int i = 0; i < n; ++i) {
        const double g0 = sample_exponential(gen, 20.0);
        const double g1 = sample_exponential(gen, 20.0);
        const double g2 = sample_exponential(gen, 20.0);
        draws[i] = g0 * (g1 + g2) / (g1 * g2);
    }
    std::sort(draws.begin(), draws.end());
    double ks = 0.0, cdf = 0.0, prev = 0.0;
    const double nn = static_cast<double>(n);
    for (int i = 0; i < n; ++i) {
        cdf += integrate([&](double t) { return pdf_T(t, p); }, prev,
                         draws[i], 1e-10);
        prev = draws[i];
        ks = std::max(
            {ks, std::abs(cdf - i / nn), std::abs(cdf - (i + 1) / nn)});
    }
    const double ks_gate = kKs1PctScale / std::sqrt(nn);
    const bool ks_ok = ks < ks_gate;

    // The literal typeset readings must remain demonstrably wrong: the
    // shifted offsets are what make the density a density.
    const double literal_mass = integrate_to_infinity(
        [&](double t) {
            return pdf_T(t, p, TIndexConvention::shifted,
                         ZetaForm::product_mean);
        },
        10.0, 1e-9, 1e-11);

    return {norm_ok && ks_ok,
            fmt("resolved reading: |norm-1| %.3g (gate 1e-5), KS %.4g "
                "(gate %.4g); literal-offset mass %.4g",
                std::abs(norm - 1.0), ks, ks_gate, literal_mass)};
}

// --- criterion 5: special-function kernel identities ---------------------

Outcome criterion_kernel_identities() {
    double worst = 0.0;
    auto track = [&worst](double actual, double expected) {
        worst = std::max(worst,
                         std::abs(actual - expected) /
                             (1.0 + std::abs(expected)));
    };

    const FoxHSpec log_ratio =
        make_meijer_spec(2, 2, {0.0, 0.0, 0.5}, {0.0, 0.0, 0.5});
    for (double z : {0.2, 0.7, 1.5, 4.0, 9.0}) {
        track(-3.14159265358979323846 * meijer_g(log_ratio, z),
              std::log(z) / (1.0 + z));
    }

    for (int v : {0, 1}) {
        const FoxHSpec bessel_product = make_meijer_spec(
            2, 0, {0.5}, {static_cast<double>(v), static_cast<double>(-v)});
        for (double x : {0.3, 0.7, 1.0, 2.0, 3.5}) {
            track(std::sqrt(3.14159265358979323846) *
                      meijer_g(bessel_product, 2.0 * x),
                  std::exp(-x) * bessel_k(v, x));
        }
    }

    const FoxHSpec log1p_kernel =
        make_meijer_spec(1, 2, {1.0, 1.0}, {1.0, 0.0});
    for (double y : {0.1, 0.8, 2.0, 6.0, 20.0}) {
        track(meijer_g(log1p_kernel, y), std::log1p(y));
    }

    // General-kernel evaluator against the unit-coefficient evaluator.
    double worst_reduce = 0.0;
    for (int n : {0, 1}) {
        const FoxHSpec rate_kernel = make_meijer_spec(
            3, 2, {1.0, 1.0, 2.5}, {2.0 + n, 2.0 - n, 1.0});
        for (double z : {0.25, 1.0, 4.0, 8.0}) {
            const double g = meijer_g(rate_kernel, z);
            const double h = fox_h(rate_kernel, z);
            worst_reduce = std::max(worst_reduce,
                                    std::abs(h - g) / (1.0 + std::abs(g)));
        }
    }
    for (double z : {0.3, 1.5, 6.0}) {
        const double g = meijer_g(log_ratio, z);
        worst_reduce =
            std::max(worst_reduce, std::abs(fox_h(log_ratio, z) - g) /
                                       (1.0 + std::abs(g)));
    }

    const bool pass = worst <= 1e-8 && worst_reduce <= 1e-8;
    return {pass,
            fmt("identity gap %.3g, evaluator cross-gap %.3g (gates 1e-8)",
                worst, worst_reduce)};
}

// --- criterion 6: closed forms agree with quadrature ---------------------

Outcome criterion_closed_vs_quadrature_terms() {
    double worst_dir = 0.0;
    const double pairs[][2] = {
        {20.0, 20.0}, {64.0, 20.0}, {40.0, 10.0}, {320.0, 320.0},
        {2000.0, 2000.0}};
    for (const auto& g : pairs) {
        const DensityParams p(1.0, g[0], g[1]);
        const double q1 = i1_quadrature(p);
        worst_dir = std::max(
            worst_dir, std::abs(i1_closed(p) - q1) / (1.0 + std::abs(q1)));
        const double q2 = i2_quadrature(p);
        worst_dir = std::max(
            worst_dir, std::abs(i2_closed(p) - q2) / (1.0 + std::abs(q2)));
    }

    double worst_ratio = 0.0;
    const double triples[][3] = {
        {20.0, 20.0, 20.0}, {2.0, 32.0, 32.0}, {2000.0, 2000.0, 2000.0}};
    for (const auto& g : triples) {
        const DensityParams p(g[0], g[1], g[2]);
        const double q = i3_quadrature(p);
        worst_ratio = std::max(
            worst_ratio, std::abs(i3_closed(p) - q) / (1.0 + std::abs(q)));
    }

    const bool pass = worst_dir <= 1e-4 && worst_ratio <= 1e-4;
    return {pass,
            fmt("directional terms: max gap %.3g over 5 sets; ratio term: "
                "max gap %.3g over 3 sets (gates 1e-4)",
                worst_dir, worst_ratio)};
}

// --- criteria 7/8: analytic average tracks Monte Carlo -------------------

Outcome mc_vs_closed_sweep(const ScenarioConfig& base) {
    ScenarioConfig cfg = base;
    cfg.snr_grid_db = {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
    cfg.trials = 1000000;
    bool pass = true;
    std::string table;
    for (double db : cfg.snr_grid_db) {
        const double rho = std::pow(10.0, db / 10.0);
        const SumRateEstimate mc =
            monte_carlo_sumrate(cfg, rho, GainMode::exact);
        const double closed = rsum_closed(cfg, rho).rsum;
        const double gap_pct =
            100.0 * std::abs(closed - mc.mean) / std::abs(mc.mean);
        const bool gated = db >= 10.0;
        if (gated && !(gap_pct < 2.0)) pass = false;
        table += fmt("%s%gdB:%.2f%%%s", table.empty() ? "" : " ", db,
                     gap_pct, gated && !(gap_pct < 2.0) ? "!" : "");
    }
    return {pass, "gap vs MC mean [" + table +
                      "], gate <2% at every point >=10 dB"};
}

Outcome criterion_symmetric_sweep() {
    return mc_vs_closed_sweep(ScenarioConfig::symmetric());
}

Outcome criterion_colinear_sweep() {
    return mc_vs_closed_sweep(ScenarioConfig::colinear());
}

// --- criterion 9: throughput gain over the one-way baseline --------------

Outcome criterion_gain_band() {
    double gains[2] = {0.0, 0.0};
    const ScenarioConfig scenarios[2] = {ScenarioConfig::symmetric(),
                                         ScenarioConfig::colinear()};
    for (int i = 0; i < 2; ++i) {
        ScenarioConfig cfg = scenarios[i];
        cfg.trials = 1000000;
        const double rho = std::pow(10.0, 3.0);  // 30 dB
        const SumRateEstimate two =
            monte_carlo_sumrate(cfg, rho, GainMode::exact);
        const SumRateEstimate one = oneway_baseline_sumrate(cfg, rho);
        gains[i] = two.mean - one.mean;
    }
    const double spread = std::abs(gains[0] - gains[1]);
    const bool band_ok = std::abs(gains[0] - 3.8) <= 0.4 &&
                         std::abs(gains[1] - 3.8) <= 0.4;
    const bool spread_ok = spread < 0.1;
    return {band_ok && spread_ok,
            fmt("30 dB gains: symmetric %.4f, colinear %.4f (band 3.8+-0.4), "
                "spread %.4f (gate <0.1)",
                gains[0], gains[1], spread)};
}

// --- criterion 10: rerun reproducibility ----------------------------------

Outcome criterion_reproducibility() {
    ScenarioConfig cfg = ScenarioConfig::symmetric();
    cfg.snr_grid_db = {0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0};
    cfg.trials = 200000;
    const std::string first = format_csv(run_experiment(cfg, MethodSet{}));
    const std::string second = format_csv(run_experiment(cfg, MethodSet{}));
    const bool identical = first == second;
    // The text must survive a parse/re-emit cycle byte-for-byte as well.
    const bool stable = format_csv(parse_csv_text(first)) == first;
    return {identical && stable,
            fmt("%zu-byte CSV rerun %s, parse/re-emit %s", first.size(),
                identical ? "identical" : "DIFFERS",
                stable ? "stable" : "UNSTABLE")};
}

Outcome run_criterion(int n) {
    switch (n) {
        case 1: return criterion_determinant_identity();
        case 2: return criterion_cancellation_residual();
        case 3: return criterion_ratio_density_fit();
        case 4: return criterion_interference_density_fit();
        case 5: return criterion_kernel_identities();
        case 6: return criterion_closed_vs_quadrature_terms();
        case 7: return criterion_symmetric_sweep();
        case 8: return criterion_colinear_sweep();
        case 9: return criterion_gain_band();
        case 10: return criterion_reproducibility();
        default: return {false, "unknown criterion"};
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > 10) {
            std::fprintf(stderr, "usage: %s [criterion 1..10]...\n", argv[0]);
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty()) {
        for (int n = 1; n <= 10; ++n) selected.push_back(n);
    }

    bool all_pass = true;
    for (int n : selected) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = run_criterion(n);
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        const double budget = kBudgetSeconds[n - 1];
        if (budget > 0.0 && elapsed > budget) {
            outcome.pass = false;
            outcome.detail +=
                fmt(" [over budget: %.1f s > %.0f s]", elapsed, budget);
        }
        std::printf("criterion %d: %s (%.1f s) -- %s\n", n,
                    outcome.pass ? "PASS" : "FAIL", elapsed,
                    outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}
