#include "twrelay/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "twrelay/errors.hpp"

namespace twrelay {
namespace {

constexpr std::uint64_t kBlockSize = 4096;

struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Shared Monte Carlo driver: averages `rate_fn(realization, rho)` over
// config.trials realizations drawn from per-trial substreams.  Blocks are
// processed by a small worker pool but always combined in block order.
template <typename RateFn>
SumRateEstimate monte_carlo_average(const ScenarioConfig& config, double rho,
                                    RateFn&& rate_fn) {
    config.validate();
    if (!(rho > 0.0)) {
        throw domain_error("monte_carlo_average: rho must be positive");
    }
    const std::uint64_t trials = config.trials;
    const std::uint64_t block_count = (trials + kBlockSize - 1) / kBlockSize;

    std::vector<double> block_sum(block_count, 0.0);
    std::vector<double> block_sumsq(block_count, 0.0);
    std::atomic<std::uint64_t> next_block{0};

    auto worker = [&]() {
        for (;;) {
            const std::uint64_t block = next_block.fetch_add(1);
            if (block >= block_count) break;
            const std::uint64_t begin = block * kBlockSize;
            const std::uint64_t end = std::min(trials, begin + kBlockSize);
            NeumaierSum sum;
            NeumaierSum sumsq;
            for (std::uint64_t trial = begin; trial < end; ++trial) {
                Xoshiro256 stream(config.seed, trial);
                const ChannelRealization realization =
                    sample_realization(config, stream);
                const double rate = rate_fn(realization, rho);
                sum.add(rate);
                sumsq.add(rate * rate);
            }
            block_sum[block] = sum.value();
            block_sumsq[block] = sumsq.value();
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned worker_count = static_cast<unsigned>(
        std::min<std::uint64_t>(std::min(hw, 8u), block_count));
    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    NeumaierSum total;
    NeumaierSum total_sq;
    for (std::uint64_t block = 0; block < block_count; ++block) {
        total.add(block_sum[block]);
        total_sq.add(block_sumsq[block]);
    }
    const double n = static_cast<double>(trials);
    const double mean = total.value() / n;
    double variance = 0.0;
    if (trials > 1) {
        variance = std::max(0.0, (total_sq.value() - n * mean * mean) /
                                     (n - 1.0));
    }
    SumRateEstimate estimate;
    estimate.mean = mean;
    estimate.std_error = std::sqrt(variance / n);
    estimate.trials = trials;
    return estimate;
}

// The two per-direction log2-determinant capacity terms of the effective
// 2x2 model, computed literally from the rank-one Gram matrix.
std::array<double, 2> directional_log2_dets(
    const ChannelRealization& realization, double rho, GainMode mode) {
    const double gain = relay_gain(realization.h1, realization.h2, rho, mode);
    const double gain_sq = gain * gain;
    const double n0 = 1.0 / rho;
    const Complex relay_path = gain * realization.h1 * realization.h2;
    const Complex direct_path = realization.h0;

    // Gram matrix of h_new = [relay_path, direct_path].
    const double g00 = std::norm(relay_path);
    const double g11 = std::norm(direct_path);
    const Complex g01 = std::conj(relay_path) * direct_path;

    std::array<double, 2> log2_dets{};
    const double other_norm[2] = {std::norm(realization.h2),
                                  std::norm(realization.h1)};
    for (int direction = 0; direction < 2; ++direction) {
        // Per-entry noise power after cancellation, then the 2 Ps scaling
        // of the symbol covariance.
        const double noise_power = n0 * (1.0 + gain_sq * other_norm[direction]);
        const double scale = 2.0 / noise_power;
        const double m00 = 1.0 + scale * g00;
        const double m11 = 1.0 + scale * g11;
        const Complex m01 = scale * g01;
        const double det = m00 * m11 - std::norm(m01);
        log2_dets[direction] = std::log2(det);
    }
    return log2_dets;
}

}  // namespace

AlamoutiCodeword alamouti_encode(Complex s1, Complex s2) {
    AlamoutiCodeword code;
    code.rows[0] = {s1, s2};
    code.rows[1] = {-std::conj(s2), std::conj(s1)};
    return code;
}

double relay_gain(Complex h1, Complex h2, double rho, GainMode mode) {
    if (!(rho > 0.0)) {
        throw domain_error("relay_gain: rho must be positive");
    }
    const double power = std::norm(h1) + std::norm(h2);
    if (mode == GainMode::high_snr) {
        if (power <= 0.0) {
            throw degenerate_error("relay_gain: both link gains vanish");
        }
        return 1.0 / std::sqrt(power);
    }
    return 1.0 / std::sqrt(power + 1.0 / rho);
}

PhaseSignals run_three_phase(const ChannelRealization& realization,
                             const std::array<Complex, 4>& symbols,
                             double rho, Xoshiro256& stream,
                             bool inject_noise) {
    if (!(rho > 0.0)) {
        throw domain_error("run_three_phase: rho must be positive");
    }
    const double n0 = 1.0 / rho;
    PhaseSignals signals;
    signals.s_code = alamouti_encode(symbols[0], symbols[1]);
    signals.x_code = alamouti_encode(symbols[2], symbols[3]);
    signals.gain =
        relay_gain(realization.h1, realization.h2, rho, GainMode::exact);

    auto draw_noise = [&](Vec2& noise) {
        for (auto& entry : noise) {
            entry = inject_noise ? stream.next_complex_normal(n0)
                                 : Complex{0.0, 0.0};
        }
    };
    draw_noise(signals.relay_noise);
    draw_noise(signals.source2_noise);
    draw_noise(signals.source1_noise);

    for (int k = 0; k < 2; ++k) {
        signals.relay_rx[k] = realization.h1 * signals.s_code.row(0)[k] +
                              realization.h2 * signals.x_code.row(0)[k] +
                              signals.relay_noise[k];
    }
    for (int k = 0; k < 2; ++k) {
        signals.source2_rx[k] =
            realization.h2 * signals.gain * signals.relay_rx[k] +
            realization.h0 * signals.s_code.row(1)[k] +
            signals.source2_noise[k];
        signals.source1_rx[k] =
            realization.h1 * signals.gain * signals.relay_rx[k] +
            realization.h0 * signals.x_code.row(1)[k] +
            signals.source1_noise[k];
    }
    return signals;
}

EffectiveSignals cancel_self_interference(
    const PhaseSignals& signals, const ChannelRealization& realization,
    double gain) {
    EffectiveSignals effective;
    const Complex self1 = gain * realization.h1 * realization.h1;
    const Complex self2 = gain * realization.h2 * realization.h2;
    for (int k = 0; k < 2; ++k) {
        effective.source1_eff[k] =
            signals.source1_rx[k] - self1 * signals.s_code.row(0)[k];
        effective.source2_eff[k] =
            signals.source2_rx[k] - self2 * signals.x_code.row(0)[k];
    }
    return effective;
}

double instantaneous_sumrate_det(const ChannelRealization& realization,
                                 double rho, GainMode mode) {
    const auto dets = directional_log2_dets(realization, rho, mode);
    return (2.0 / 3.0) * (dets[0] + dets[1]);
}

double instantaneous_sumrate_scalar(const ChannelRealization& realization,
                                    double rho) {
    if (!(rho > 0.0)) {
        throw domain_error("instantaneous_sumrate_scalar: rho must be positive");
    }
    const double a0 = std::norm(realization.h0);
    const double a1 = std::norm(realization.h1);
    const double a2 = std::norm(realization.h2);
    const double cross = a1 * a2 + a0 * (a1 + a2);
    const double term1 = 1.0 + 2.0 * rho * cross / (a1 + 2.0 * a2);
    const double term2 = 1.0 + 2.0 * rho * cross / (a2 + 2.0 * a1);
    return (2.0 / 3.0) * (std::log2(term1) + std::log2(term2));
}

HighSnrSplit high_snr_split(const ChannelRealization& realization,
                            double rho) {
    const auto gamma = sample_gamma_vars(realization, rho);
    const double g0 = gamma[0];
    const double g1 = gamma[1];
    const double g2 = gamma[2];
    if (g0 <= 0.0 || g1 <= 0.0 || g2 <= 0.0) {
        throw degenerate_error("high_snr_split: vanishing instantaneous SNR");
    }
    HighSnrSplit split;
    split.i1_term = std::log(g1 * g2 / (g1 + 2.0 * g2));
    split.i2_term = std::log(g1 * g2 / (g2 + 2.0 * g1));
    split.i3_term = std::log1p(g0 * (g1 + g2) / (g1 * g2));
    return split;
}

double split_to_rate(const HighSnrSplit& split) {
    constexpr double kLn2 = 0.69314718055994530942;
    return (2.0 / (3.0 * kLn2)) *
           (split.i1_term + split.i2_term + 2.0 * split.i3_term);
}

SumRateEstimate monte_carlo_sumrate(const ScenarioConfig& config, double rho,
                                    GainMode mode) {
    return monte_carlo_average(
        config, rho, [mode](const ChannelRealization& realization, double r) {
            return instantaneous_sumrate_det(realization, r, mode);
        });
}

SumRateEstimate oneway_baseline_sumrate(const ScenarioConfig& config,
                                        double rho) {
    return monte_carlo_average(
        config, rho, [](const ChannelRealization& realization, double r) {
            const auto dets =
                directional_log2_dets(realization, r, GainMode::exact);
            return 0.5 * (dets[0] + dets[1]);
        });
}

}  // namespace twrelay
