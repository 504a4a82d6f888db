#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/quadrature.hpp"

namespace kappa {

/// Dimension and deformation length of the solvable group behind the
/// deformed coordinate algebra [x0, xj] = i lambda xj.
struct GroupConfig {
    int n = 2;
    double lambda = 0.5;

    void validate() const {
        if (n < 2) throw config_error("GroupConfig: n must be >= 2");
        if (!(lambda >= 0.0) || !std::isfinite(lambda))
            throw config_error("GroupConfig: lambda must be finite and >= 0");
    }
};

/// Group element in the (a0, avec) coordinates; avec has n-1 entries.
struct GroupElement {
    double a0 = 0.0;
    std::vector<double> avec;

    static GroupElement identity(int n) {
        return {0.0, std::vector<double>(static_cast<std::size_t>(n - 1), 0.0)};
    }
};

/// Group law (a0+b0, avec_a + e^{-lambda a0} avec_b); abelian when lambda=0.
inline GroupElement multiply(const GroupElement& a, const GroupElement& b,
                             const GroupConfig& cfg) {
    GroupElement out;
    out.a0 = a.a0 + b.a0;
    out.avec.resize(a.avec.size());
    const double scale = cfg.lambda == 0.0 ? 1.0 : std::exp(-cfg.lambda * a.a0);
    for (std::size_t j = 0; j < a.avec.size(); ++j) out.avec[j] = a.avec[j] + scale * b.avec[j];
    return out;
}

/// Inverse (-a0, -e^{lambda a0} avec).
inline GroupElement inverse(const GroupElement& a, const GroupConfig& cfg) {
    GroupElement out;
    out.a0 = -a.a0;
    out.avec.resize(a.avec.size());
    const double scale = cfg.lambda == 0.0 ? 1.0 : std::exp(cfg.lambda * a.a0);
    for (std::size_t j = 0; j < a.avec.size(); ++j) out.avec[j] = -scale * a.avec[j];
    return out;
}

enum class MeasureSide { left, right };

/// Density of the invariant measure w.r.t. Lebesgue d^n a:
/// left-invariant e^{lambda (n-1) a0}, right-invariant 1.
inline double measure_density(MeasureSide side, const GroupElement& a, const GroupConfig& cfg) {
    if (side == MeasureSide::right) return 1.0;
    return std::exp(cfg.lambda * static_cast<double>(cfg.n - 1) * a.a0);
}

struct QuadSpec {
    double half_width = 12.0;
    double tol = 1e-10;
    std::size_t max_panels = 4000;
};

/// | integral of the shifted integrand - integral of f | over the box
/// [-hw, hw]^n: side=left compares f(shift * b) against f(b) in the left
/// measure, side=right compares f(b * shift) in the right measure.
/// Throws domain_too_small_error when f is not negligible on the boundary.
inline double invariance_residual(const std::function<double(const GroupElement&)>& f,
                                  MeasureSide side, const GroupElement& shift,
                                  const GroupConfig& cfg, const QuadSpec& quad = {}) {
    cfg.validate();
    const std::size_t dim = static_cast<std::size_t>(cfg.n);
    auto shifted = [&](const GroupElement& b) {
        return side == MeasureSide::left ? f(multiply(shift, b, cfg)) : f(multiply(b, shift, cfg));
    };
    auto integrand_plain = [&](const std::vector<double>& x) {
        GroupElement b{x[0], std::vector<double>(x.begin() + 1, x.end())};
        return f(b) * measure_density(side, b, cfg);
    };
    auto integrand_shifted = [&](const std::vector<double>& x) {
        GroupElement b{x[0], std::vector<double>(x.begin() + 1, x.end())};
        return shifted(b) * measure_density(side, b, cfg);
    };

    // Boundary probe: face centers of the box for both integrands.
    double boundary_max = 0.0;
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (double sgn : {-1.0, 1.0}) {
            std::vector<double> x(dim, 0.0);
            x[axis] = sgn * quad.half_width;
            boundary_max = std::max(boundary_max, std::abs(integrand_plain(x)));
            boundary_max = std::max(boundary_max, std::abs(integrand_shifted(x)));
        }
    }
    if (boundary_max > quad.tol)
        throw domain_too_small_error("integrand not negligible at quadrature box boundary");

    std::vector<double> lo(dim, -quad.half_width), hi(dim, quad.half_width);
    auto a = integrate_box<double>(integrand_shifted, lo, hi, quad.tol, quad.tol, quad.max_panels);
    auto b = integrate_box<double>(integrand_plain, lo, hi, quad.tol, quad.tol, quad.max_panels);
    return std::abs(a.value - b.value);
}

}  // namespace kappa
