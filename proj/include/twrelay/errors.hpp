#pragma once

#include <stdexcept>
#include <string>

namespace twrelay {

// Argument outside the mathematical domain of the function (x <= 0 etc.).
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Structurally invalid parameterization (bad orders, non-positive coefficients,
// contour cannot separate pole families, ...).
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

// Parameters are valid but lie outside the region where a closed form is
// derivable; callers are expected to fall back to quadrature or Monte-Carlo.
class region_error : public std::runtime_error {
public:
    explicit region_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical scheme failed to stabilize after maximum refinement. Carries the
// last two successive estimates so callers can judge how bad the residual is.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double previous, double last)
        : std::runtime_error(what), previous_estimate(previous), last_estimate(last) {}

    double previous_estimate;
    double last_estimate;
};

// Channel realization degenerate for the requested operation (e.g. both relay
// links exactly zero when the asymptotic relay gain is requested).
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace twrelay
