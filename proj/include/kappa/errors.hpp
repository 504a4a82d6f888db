#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace kappa {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration value (dimension, grid, tolerance, ...).
struct config_error : error {
    using error::error;
};

/// Axis-0 frequency mass outside the declared band exceeds band_tolerance,
/// or the grid cannot represent the declared band.
struct band_error : error {
    using error::error;
};

/// Rescaled interpolation points leave the spatial grid where |g| is not
/// negligible.
struct support_overflow_error : error {
    using error::error;
};

/// e^{|s| lambda B} exceeds the floating-point overflow budget.
struct modular_overflow_error : error {
    using error::error;
};

/// Gamma evaluated at a nonpositive integer.
struct gamma_pole_error : error {
    using error::error;
};

/// Hypergeometric lower parameter c at a nonpositive integer.
struct hyp_c_pole_error : error {
    using error::error;
};

/// Series/transformation error estimate exceeds the requested tolerance.
struct non_convergence_error : error {
    using error::error;
};

/// Evaluation requested at (or too close to) a pole of the continued
/// expression; carries the pole location and which family it belongs to.
struct at_pole_error : error {
    std::complex<double> location;
    std::string origin;  // "commutative" or "deformed"
    at_pole_error(const std::string& msg, std::complex<double> loc, std::string org)
        : error(msg), location(loc), origin(std::move(org)) {}
};

/// Residue test circle would enclose or touch a second pole.
struct circle_overlap_error : error {
    using error::error;
};

/// Quadrature domain too small: integrand not negligible at the boundary.
struct domain_too_small_error : error {
    using error::error;
};

/// Convergence classifier tail fit is not decisive.
struct classifier_inconclusive_error : error {
    using error::error;
};

/// Requested evaluation outside the supported parameter/argument region.
struct unsupported_region_error : error {
    using error::error;
};

}  // namespace kappa
