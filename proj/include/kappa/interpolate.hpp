#pragma once

#include <array>
#include <cmath>

#include "kappa/errors.hpp"

namespace kappa {

inline constexpr int max_interp_order = 8;

/// Local Lagrange stencil on a uniform grid: weights over `order`
/// consecutive nodes starting at index `base`. `outside` marks query points
/// beyond the grid range (value taken as 0 by callers after a support check).
struct Stencil {
    int base = 0;
    int order = 0;
    bool outside = false;
    std::array<double, max_interp_order> w{};
};

/// Build the interpolation stencil for query point q on the grid
/// x_i = x0 + i h, i = 0..npts-1. order must be even, 2..8.
inline Stencil make_stencil(double x0, double h, int npts, double q, int order) {
    if (order < 2 || order > max_interp_order || order % 2 != 0)
        throw config_error("interpolation order must be even and <= 8");
    if (npts < order) throw config_error("grid too small for interpolation order");
    Stencil st;
    st.order = order;
    double t = (q - x0) / h;
    const double edge_slack = 1e-9;
    if (t < -edge_slack || t > static_cast<double>(npts - 1) + edge_slack) {
        st.outside = true;
        return st;
    }
    int base = static_cast<int>(std::floor(t)) - (order / 2 - 1);
    if (base < 0) base = 0;
    if (base > npts - order) base = npts - order;
    st.base = base;
    double s = t - static_cast<double>(base);
    for (int i = 0; i < order; ++i) {
        double num = 1.0, den = 1.0;
        for (int j = 0; j < order; ++j) {
            if (j == i) continue;
            num *= s - static_cast<double>(j);
            den *= static_cast<double>(i - j);
        }
        st.w[static_cast<std::size_t>(i)] = num / den;
    }
    return st;
}

}  // namespace kappa
