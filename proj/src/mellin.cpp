#include "twrelay/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "twrelay/errors.hpp"
#include "twrelay/gammafn.hpp"

namespace twrelay {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

bool FoxHSpec::is_meijer() const {
    auto unit = [](const std::pair<double, double>& e) { return e.second == 1.0; };
    return std::all_of(upper.begin(), upper.end(), unit) &&
           std::all_of(lower.begin(), lower.end(), unit);
}

void FoxHSpec::validate() const {
    if (m < 0 || n < 0 || m > q() || n > p()) {
        throw parameter_error("fox_h: order indices must satisfy 0 <= m <= q, 0 <= n <= p");
    }
    for (const auto& [a, A] : upper) {
        (void)a;
        if (!(A > 0.0)) {
            throw parameter_error("fox_h: upper coefficients must be positive");
        }
    }
    for (const auto& [b, B] : lower) {
        (void)b;
        if (!(B > 0.0)) {
            throw parameter_error("fox_h: lower coefficients must be positive");
        }
    }
}

double FoxHSpec::left_pole_bound() const {
    // Poles of G(b_j + B_j s), j <= m, at s = -(b_j + k)/B_j: rightmost is -b_j/B_j.
    double bound = -kInf;
    for (int j = 0; j < m; ++j) {
        bound = std::max(bound, -lower[j].first / lower[j].second);
    }
    return bound;
}

double FoxHSpec::right_pole_bound() const {
    // Poles of G(1 - a_j - A_j s), j <= n, at s = (1 - a_j + k)/A_j: leftmost
    // is (1 - a_j)/A_j.
    double bound = kInf;
    for (int j = 0; j < n; ++j) {
        bound = std::min(bound, (1.0 - upper[j].first) / upper[j].second);
    }
    return bound;
}

double FoxHSpec::contour_decay_rate() const {
    // |G(x+iy)| ~ e^{-pi |y|/2} per gamma factor, with the coefficient scaling
    // the imaginary part.
    double rate = 0.0;
    for (int j = 0; j < q(); ++j) {
        rate += (j < m ? 1.0 : -1.0) * lower[j].second;
    }
    for (int j = 0; j < p(); ++j) {
        rate += (j < n ? 1.0 : -1.0) * upper[j].second;
    }
    return 0.5 * kPi * rate;
}

std::complex<double> FoxHSpec::log_chi(std::complex<double> s) const {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < q(); ++j) {
        const auto& [b, B] = lower[j];
        if (j < m) {
            acc += log_gamma(b + B * s);
        } else {
            acc -= log_gamma(1.0 - b - B * s);
        }
    }
    for (int j = 0; j < p(); ++j) {
        const auto& [a, A] = upper[j];
        if (j < n) {
            acc += log_gamma(1.0 - a - A * s);
        } else {
            acc -= log_gamma(a + A * s);
        }
    }
    return acc;
}

ContourSpec::ContourSpec(const FoxHSpec& spec, double tol) {
    spec.validate();
    const double left = spec.left_pole_bound();
    const double right = spec.right_pole_bound();
    if (left >= right) {
        throw parameter_error("fox_h: contour cannot separate the pole families");
    }
    if (spec.m == 0 && spec.n == 0) {
        throw parameter_error("fox_h: no gamma factors define a pole structure");
    }
    if (spec.m == 0) {
        abscissa = right - 1.0;
    } else if (spec.n == 0) {
        abscissa = left + 1.0;
    } else {
        abscissa = 0.5 * (left + right);
    }
    const double rate = spec.contour_decay_rate();
    if (rate <= 1e-3) {
        throw convergence_error(
            "fox_h: contour integrand lacks exponential decay", 0.0, 0.0);
    }
    height = std::max(10.0, (-std::log(tol) + 12.0) / rate);
    node_limit = 15;
    adaptive = true;
}

ContourSpec::ContourSpec(const FoxHSpec& spec, double abscissa_, double height_,
                         int node_limit_, bool adaptive_) {
    spec.validate();
    if (!(height_ > 0.0) || node_limit_ <= 0) {
        throw parameter_error("contour: height and node count must be positive");
    }
    if (!(abscissa_ > spec.left_pole_bound() && abscissa_ < spec.right_pole_bound())) {
        throw parameter_error("contour: abscissa does not separate the pole families");
    }
    abscissa = abscissa_;
    height = height_;
    node_limit = node_limit_;
    adaptive = adaptive_;
}

namespace {

// One truncated-contour evaluation: (z^{-c}/pi) int_0^T Re[e^{chi(c+it)} e^{-it ln z}] dt,
// using the conjugate symmetry of chi for real parameters.
double contour_integral(const FoxHSpec& spec, double z, double c, double T,
                        int depth, double tol) {
    const double lz = std::log(z);
    auto f = [&](double t) {
        const std::complex<double> s(c, t);
        const std::complex<double> w = spec.log_chi(s) - std::complex<double>(0.0, t * lz);
        return std::exp(w.real()) * std::cos(w.imag());
    };
    using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
    double err = 0.0;
    const double integral = gk::integrate(f, 0.0, T, depth, tol, &err);
    return std::pow(z, -c) * integral / kPi;
}

}  // namespace

double fox_h(const FoxHSpec& spec, double z, const ContourSpec& contour, double tol) {
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw domain_error("fox_h: requires finite z > 0");
    }
    spec.validate();

    double T = contour.height;
    double prev = contour_integral(spec, z, contour.abscissa, T, contour.node_limit, tol * 0.1);
    if (!contour.adaptive) {
        return prev;
    }
    for (int round = 0; round < 6; ++round) {
        T *= 2.0;
        const double cur =
            contour_integral(spec, z, contour.abscissa, T, contour.node_limit, tol * 0.1);
        if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) {
            return cur;
        }
        prev = cur;
    }
    const double last =
        contour_integral(spec, z, contour.abscissa, 2.0 * T, contour.node_limit, tol * 0.1);
    throw convergence_error("fox_h: truncated contour estimates did not stabilize",
                            prev, last);
}

double fox_h(const FoxHSpec& spec, double z, double tol) {
    return fox_h(spec, z, ContourSpec(spec, tol), tol);
}

FoxHSpec make_meijer_spec(int m, int n, const std::vector<double>& a,
                          const std::vector<double>& b) {
    FoxHSpec spec;
    spec.m = m;
    spec.n = n;
    spec.upper.reserve(a.size());
    for (double av : a) spec.upper.push_back({av, 1.0});
    spec.lower.reserve(b.size());
    for (double bv : b) spec.lower.push_back({bv, 1.0});
    spec.validate();
    return spec;
}

double meijer_g(const FoxHSpec& spec, double z, double tol) {
    spec.validate();
    if (!spec.is_meijer()) {
        throw parameter_error("meijer_g: all coefficients must equal 1");
    }
    return fox_h(spec, z, tol);
}

}  // namespace twrelay
