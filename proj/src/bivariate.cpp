#include "twrelay/bivariate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "twrelay/errors.hpp"
#include "twrelay/gammafn.hpp"

namespace twrelay {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Truncation heights for the two contours.  The s-kernel used throughout
// this library decays at rate >= pi and the t-kernel at rate >= pi/2, so
// these heights push the truncated tails far below the 1e-6 target.
constexpr double kHeight1 = 18.0;
constexpr double kHeight2 = 22.0;
constexpr double kCoarseStep = 0.04;
constexpr double kFineStep = 0.025;

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

double joint_margin(const std::vector<BivariateTerm>& joint, double s1,
                    double s2) {
    double margin = std::numeric_limits<double>::infinity();
    for (const auto& term : joint) {
        margin = std::min(margin, term.e - term.E1 * s1 - term.E2 * s2);
    }
    return margin;
}

// Node factor chi(sigma + i*tau) * z^{-(sigma + i*tau)}.  On the real node
// (tau = 0) a denominator gamma may sit exactly on a pole; chi vanishes
// there, so the factor is zero.  Numerator poles cannot be hit because the
// abscissa lies strictly inside the pole-separating strip.
std::complex<double> node_factor(const FoxHSpec& f, double sigma, double tau,
                                 double log_z) {
    const std::complex<double> s(sigma, tau);
    try {
        return std::exp(f.log_chi(s) - s * log_z);
    } catch (const domain_error&) {
        if (tau == 0.0) return {0.0, 0.0};
        throw;
    }
}

// Abscissa strictly inside the strip of factor1.  A slight bias off the
// midpoint keeps denominator gammas away from integer arguments on the
// tau = 0 grid node.
double start_abscissa_mid(const FoxHSpec& f) {
    const double left = f.left_pole_bound();
    const double right = f.right_pole_bound();
    const bool has_left = std::isfinite(left);
    const bool has_right = std::isfinite(right);
    if (has_left && has_right) {
        if (!(right > left)) {
            throw parameter_error(
                "bivariate_fox_h: factor1 admits no separating contour");
        }
        return left + 0.46 * (right - left);
    }
    if (has_left) return left + 1.0;
    if (has_right) return right - 1.0;
    return 0.0;
}

// Abscissa for factor2: just to the right of its ascending poles so the
// joint gammas keep the widest possible margin.
double start_abscissa_low(const FoxHSpec& f) {
    const double left = f.left_pole_bound();
    const double right = f.right_pole_bound();
    const bool has_left = std::isfinite(left);
    const bool has_right = std::isfinite(right);
    if (has_left && has_right) {
        if (!(right > left)) {
            throw parameter_error(
                "bivariate_fox_h: factor2 admits no separating contour");
        }
        return left + std::min(0.45, 0.5 * (right - left));
    }
    if (has_left) return left + 0.45;
    if (has_right) return right - 1.0;
    return 0.0;
}

// Serialized cache key; %.17g round-trips doubles exactly.
std::string cache_key(const BivariateFoxHSpec& spec, double z1, double z2,
                      double tol) {
    std::string key;
    key.reserve(256);
    char buf[40];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g,", v);
        key += buf;
    };
    key += "J:";
    for (const auto& t : spec.joint) {
        put(t.e);
        put(t.E1);
        put(t.E2);
    }
    for (const FoxHSpec* f : {&spec.factor1, &spec.factor2}) {
        key += "|F:";
        std::snprintf(buf, sizeof(buf), "%d,%d;", f->m, f->n);
        key += buf;
        for (const auto& [a, A] : f->upper) {
            put(a);
            put(A);
        }
        key += ";";
        for (const auto& [b, B] : f->lower) {
            put(b);
            put(B);
        }
    }
    key += "|z:";
    put(z1);
    put(z2);
    put(tol);
    return key;
}

// Trapezoidal sum over the truncated product grid.  tau1 spans the full
// symmetric range; tau2 spans [0, T2] only, with the conjugate half-plane
// recovered through the 2*Re(...) fold in the caller.
std::complex<double> grid_sum(const BivariateFoxHSpec& spec, double sigma1,
                              double sigma2, double log_z1, double log_z2,
                              double step) {
    const int half1 = static_cast<int>(std::lround(kHeight1 / step));
    const int count1 = 2 * half1 + 1;
    const int count2 = static_cast<int>(std::lround(kHeight2 / step)) + 1;

    std::vector<std::complex<double>> nodes1(count1);
    std::vector<std::complex<double>> nodes2(count2);
    for (int i = 0; i < count1; ++i) {
        const double tau = (i - half1) * step;
        const double weight = (i == 0 || i == count1 - 1) ? 0.5 * step : step;
        nodes1[i] = node_factor(spec.factor1, sigma1, tau, log_z1) * weight;
    }
    for (int j = 0; j < count2; ++j) {
        const double tau = j * step;
        const double weight = (j == 0 || j == count2 - 1) ? 0.5 * step : step;
        nodes2[j] = node_factor(spec.factor2, sigma2, tau, log_z2) * weight;
    }

    // Rows whose s-kernel magnitude is negligible relative to the peak
    // cannot move the total at the requested tolerance; skip them.
    double peak1 = 0.0;
    for (const auto& v : nodes1) peak1 = std::max(peak1, std::abs(v));
    const double row_cutoff = peak1 * 1e-28;

    const int chunk_count = 16;
    std::vector<std::complex<double>> partial(chunk_count, {0.0, 0.0});
    std::atomic<int> next_chunk{0};

    auto worker = [&]() {
        for (;;) {
            const int chunk = next_chunk.fetch_add(1);
            if (chunk >= chunk_count) break;
            const int begin = static_cast<int>(
                static_cast<long long>(chunk) * count1 / chunk_count);
            const int end = static_cast<int>(
                static_cast<long long>(chunk + 1) * count1 / chunk_count);
            NeumaierSum re_sum;
            NeumaierSum im_sum;
            for (int i = begin; i < end; ++i) {
                const std::complex<double> a1 = nodes1[i];
                if (std::abs(a1) < row_cutoff) continue;
                const std::complex<double> s(sigma1, (i - half1) * step);
                for (int j = 0; j < count2; ++j) {
                    const std::complex<double> t(sigma2, j * step);
                    std::complex<double> log_joint(0.0, 0.0);
                    for (const auto& term : spec.joint) {
                        log_joint += log_gamma(term.e - term.E1 * s -
                                               term.E2 * t);
                    }
                    const std::complex<double> value =
                        std::exp(log_joint) * a1 * nodes2[j];
                    re_sum.add(value.real());
                    im_sum.add(value.imag());
                }
            }
            partial[chunk] = {re_sum.value(), im_sum.value()};
        }
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const unsigned worker_count =
        std::min({hw, 8u, static_cast<unsigned>(chunk_count)});
    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            threads.emplace_back(worker);
        }
        for (auto& th : threads) th.join();
    }

    NeumaierSum re_total;
    NeumaierSum im_total;
    for (const auto& p : partial) {
        re_total.add(p.real());
        im_total.add(p.imag());
    }
    return {re_total.value(), im_total.value()};
}

double evaluate(const BivariateFoxHSpec& spec, double z1, double z2,
                double tol) {
    const double log_z1 = std::log(z1);
    const double log_z2 = std::log(z2);

    double sigma1 = start_abscissa_mid(spec.factor1);
    double sigma2 = start_abscissa_low(spec.factor2);
    const double left1 = spec.factor1.left_pole_bound();
    const double left2 = spec.factor2.left_pole_bound();
    const double anchor1 = std::isfinite(left1) ? left1 : sigma1 - 1.0;
    const double anchor2 = std::isfinite(left2) ? left2 : sigma2 - 1.0;
    if (!spec.joint.empty()) {
        int rounds = 0;
        while (joint_margin(spec.joint, sigma1, sigma2) < 0.2 &&
               rounds < 40) {
            sigma1 = anchor1 + 0.6 * (sigma1 - anchor1);
            sigma2 = anchor2 + 0.6 * (sigma2 - anchor2);
            ++rounds;
        }
        if (joint_margin(spec.joint, sigma1, sigma2) < 0.02) {
            throw parameter_error(
                "bivariate_fox_h: no contour separates the joint poles");
        }
    }

    auto estimate = [&](double step) {
        const std::complex<double> total =
            grid_sum(spec, sigma1, sigma2, log_z1, log_z2, step);
        return total.real() / (2.0 * kPi * kPi);
    };

    const double coarse = estimate(kCoarseStep);
    const double fine = estimate(kFineStep);
    if (std::abs(fine - coarse) <= tol * (1.0 + std::abs(fine))) {
        return fine;
    }
    const double finest = estimate(kFineStep / 1.5);
    if (std::abs(finest - fine) <= tol * (1.0 + std::abs(finest))) {
        return finest;
    }
    throw convergence_error("bivariate_fox_h: grid refinement stalled", fine,
                            finest);
}

}  // namespace

void BivariateFoxHSpec::validate() const {
    factor1.validate();
    factor2.validate();
    for (const auto& term : joint) {
        if (!(term.E1 > 0.0) || !(term.E2 > 0.0)) {
            throw parameter_error(
                "BivariateFoxHSpec: joint coefficients must be positive");
        }
        if (!std::isfinite(term.e)) {
            throw parameter_error(
                "BivariateFoxHSpec: joint offsets must be finite");
        }
    }
}

double bivariate_fox_h(const BivariateFoxHSpec& spec, double z1, double z2,
                       double tol) {
    spec.validate();
    if (!(z1 > 0.0) || !(z2 > 0.0)) {
        throw domain_error("bivariate_fox_h: arguments must be positive");
    }
    if (!(tol > 0.0)) {
        throw parameter_error("bivariate_fox_h: tolerance must be positive");
    }

    static std::mutex cache_mutex;
    static std::map<std::string, double> cache;
    const std::string key = cache_key(spec, z1, z2, tol);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const double value = evaluate(spec, z1, z2, tol);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(key, value);
    }
    return value;
}

}  // namespace twrelay
