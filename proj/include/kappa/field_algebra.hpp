#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/fft.hpp"
#include "kappa/grid_function.hpp"
#include "kappa/interpolate.hpp"
#include "kappa/parallel.hpp"

namespace kappa {

namespace detail {

constexpr double support_shell_tolerance = 1e-8;

/// Largest |f| on the outermost spatial shell. Spatial rescaling by
/// e^{-lambda p0} can push evaluation points off the grid; those are treated
/// as zero, which is sound only if the function is already negligible there.
inline double spatial_boundary_sup(const GridFunction& f) {
    const std::size_t nsp = f.spatial_size();
    const int n0 = f.axes[0].npts;
    double m = 0.0;
    std::vector<int> idx;
    for (std::size_t sp = 0; sp < nsp; ++sp) {
        f.spatial_indices(sp, idx);
        bool shell = false;
        for (std::size_t a = 0; a < idx.size(); ++a)
            if (idx[a] <= 0 || idx[a] >= f.axes[a + 1].npts - 1) shell = true;
        if (!shell) continue;
        for (int i0 = 0; i0 < n0; ++i0) m = std::max(m, std::abs(f.at(i0, sp)));
    }
    return m;
}

inline void require_spatial_decay(const GridFunction& g, const char* what) {
    double s = sup_norm(g);
    if (s == 0.0) return;
    if (spatial_boundary_sup(g) > support_shell_tolerance * s)
        throw support_overflow_error(std::string(what) +
                                     ": rescaled points leave the spatial grid where the "
                                     "function is not negligible");
}

/// Per-axis Lagrange stencils for evaluating a grid slice at scale * x_j.
inline std::vector<std::vector<Stencil>> rescale_stencils(const GridFunction& g, double scl,
                                                          int order) {
    std::vector<std::vector<Stencil>> st(g.axes.size() - 1);
    for (std::size_t a = 1; a < g.axes.size(); ++a) {
        const GridAxis& ax = g.axes[a];
        st[a - 1].resize(static_cast<std::size_t>(ax.npts));
        for (int j = 0; j < ax.npts; ++j)
            st[a - 1][static_cast<std::size_t>(j)] =
                make_stencil(ax.x0, ax.h, ax.npts, scl * ax.coord(j), order);
    }
    return st;
}

/// Separable application of per-axis stencils to one flat spatial slice.
inline void apply_rescale(const GridFunction& g,
                          const std::vector<std::vector<Stencil>>& st,
                          const std::complex<double>* slice_in,
                          std::vector<std::complex<double>>& work,
                          std::vector<std::complex<double>>& out) {
    const std::size_t nsp = g.spatial_size();
    out.assign(slice_in, slice_in + nsp);
    const std::size_t naxes = g.axes.size() - 1;
    std::size_t stride = nsp;
    for (std::size_t a = 0; a < naxes; ++a) {
        const std::size_t npts = static_cast<std::size_t>(g.axes[a + 1].npts);
        stride /= npts;
        work.assign(nsp, std::complex<double>{});
        const std::size_t blocks = nsp / (npts * stride);
        for (std::size_t blk = 0; blk < blocks; ++blk) {
            const std::size_t base_blk = blk * npts * stride;
            for (std::size_t j = 0; j < npts; ++j) {
                const Stencil& s = st[a][j];
                if (s.outside) continue;
                for (std::size_t inner = 0; inner < stride; ++inner) {
                    std::complex<double> acc{};
                    const std::size_t off = base_blk + inner;
                    for (int t = 0; t < s.order; ++t)
                        acc += s.w[static_cast<std::size_t>(t)] *
                               out[off + (static_cast<std::size_t>(s.base) + static_cast<std::size_t>(t)) * stride];
                    work[off + j * stride] = acc;
                }
            }
        }
        out.swap(work);
    }
}

}  // namespace detail

/// Deformed product: (f*g)(x0, xv) integrates e^{i p0 x0} (F0 f)(p0, xv)
/// g(x0, e^{-lambda p0} xv) over the compact frequency band of f. At
/// lambda = 0 this is the plain pointwise product.
inline GridFunction star_product(const GridFunction& f, const GridFunction& g,
                                 int interp_order = 8) {
    require_same_grids(f, g);
    f.validate_geometry();
    g.validate_geometry();
    if (f.cfg.lambda == 0.0) return pointwise_product(f, g);
    detail::require_spatial_decay(g, "star_product");

    GridFunction out = f;
    out.band_limit = f.band_limit + g.band_limit;
    if (out.nyquist0() < 2.0 * out.band_limit)
        throw band_error("star product band exceeds the grid Nyquist budget");
    std::fill(out.samples.begin(), out.samples.end(), std::complex<double>{});

    const std::size_t n0 = static_cast<std::size_t>(f.axes[0].npts);
    const std::size_t nsp = f.spatial_size();
    const double two_pi = 6.283185307179586476925286766559006;
    auto fspec = detail::axis0_spectrum(f);

    for (std::size_t k = 0; k < n0; ++k) {
        const double p = bin_frequency(k, n0, f.axes[0].h);
        if (std::abs(p) > f.band_limit * (1.0 + 1e-12)) continue;
        const double scl = std::exp(-f.cfg.lambda * p);
        auto stencils = detail::rescale_stencils(g, scl, interp_order);
        const double theta = two_pi * static_cast<double>(signed_index(k, n0)) /
                             static_cast<double>(n0);
        parallel_for(n0, [&](std::size_t i) {
            std::vector<std::complex<double>> resc, work;
            detail::apply_rescale(g, stencils, &g.samples[i * nsp], work, resc);
            const std::complex<double> phase =
                std::polar(1.0 / static_cast<double>(n0), theta * static_cast<double>(i));
            for (std::size_t sp = 0; sp < nsp; ++sp)
                out.samples[i * nsp + sp] += phase * fspec[k * nsp + sp] * resc[sp];
        });
    }

    auto ospec = detail::axis0_spectrum(out);
    double mass = detail::project_band(ospec, out.axes[0], nsp, out.band_limit);
    if (mass > GridFunction::band_tolerance)
        throw band_error("star product output violates its band limit");
    detail::axis0_inverse_into(ospec, out);
    return out;
}

/// Algebra involution: f -> integral of e^{i p0 x0} (F0 conj(f))(p0,
/// e^{-lambda p0} xv) dp0 / 2 pi. At lambda = 0 this is plain conjugation.
inline GridFunction involution(const GridFunction& f, int interp_order = 8) {
    f.validate_geometry();
    GridFunction out = f;
    for (auto& v : out.samples) v = std::conj(v);
    if (f.cfg.lambda == 0.0) return out;
    detail::require_spatial_decay(f, "involution");

    const std::size_t n0 = static_cast<std::size_t>(f.axes[0].npts);
    const std::size_t nsp = f.spatial_size();
    auto spec = detail::axis0_spectrum(out);  // F0 of conj(f)

    std::vector<std::complex<double>> shifted(spec.size(), std::complex<double>{});
    parallel_for(n0, [&](std::size_t k) {
        const double p = bin_frequency(k, n0, f.axes[0].h);
        if (std::abs(p) > f.band_limit * (1.0 + 1e-12)) return;
        const double scl = std::exp(-f.cfg.lambda * p);
        auto stencils = detail::rescale_stencils(f, scl, interp_order);
        std::vector<std::complex<double>> resc, work;
        detail::apply_rescale(f, stencils, &spec[k * nsp], work, resc);
        for (std::size_t sp = 0; sp < nsp; ++sp) shifted[k * nsp + sp] = resc[sp];
    });
    detail::axis0_inverse_into(shifted, out);

    auto check = detail::axis0_spectrum(out);
    double mass = detail::project_band(check, out.axes[0], nsp, out.band_limit);
    if (mass > GridFunction::band_tolerance)
        throw band_error("involution output violates the band limit");
    detail::axis0_inverse_into(check, out);
    return out;
}

/// |omega(f*g) - omega(modular_shift(g, s) * f)|: the trace defect for a
/// candidate twist exponent s. The defect vanishes (to quadrature accuracy)
/// exactly at s = n - 1.
inline double trace_residual_with_shift(const GridFunction& f, const GridFunction& g, double s,
                                        int interp_order = 8) {
    auto lhs = weight_omega(star_product(f, g, interp_order));
    auto gs = modular_shift(g, s);
    auto rhs = weight_omega(star_product(gs, f, interp_order));
    return std::abs(lhs.value - rhs.value);
}

inline double twisted_trace_residual(const GridFunction& f, const GridFunction& g,
                                     int interp_order = 8) {
    return trace_residual_with_shift(f, g, static_cast<double>(f.cfg.n - 1), interp_order);
}

inline double untwisted_trace_residual(const GridFunction& f, const GridFunction& g,
                                       int interp_order = 8) {
    return trace_residual_with_shift(f, g, 0.0, interp_order);
}

/// Real-time KMS flow descriptor: translation x0 -> x0 - t (n-1) lambda,
/// equivalently the axis-0 frequency multiplier e^{-i t (n-1) lambda p0};
/// the modular operator is the positive multiplier e^{-(n-1) lambda p0}.
struct KmsFlowDescriptor {
    double t = 0.0;
    int n = 2;
    double lambda = 0.0;

    double translation() const { return -t * static_cast<double>(n - 1) * lambda; }
    std::complex<double> frequency_multiplier(double p0) const {
        return std::polar(1.0, -t * static_cast<double>(n - 1) * lambda * p0);
    }
    double modular_operator_multiplier(double p0) const {
        return std::exp(-static_cast<double>(n - 1) * lambda * p0);
    }
    KmsFlowDescriptor compose(const KmsFlowDescriptor& o) const {
        if (n != o.n || lambda != o.lambda)
            throw config_error("composing KMS flows from different configurations");
        return {t + o.t, n, lambda};
    }
};

inline KmsFlowDescriptor kms_multiplier(double t, const GroupConfig& cfg) {
    cfg.validate();
    return {t, cfg.n, cfg.lambda};
}

/// Apply the real-time flow to a grid function (in-band unitary multiplier).
inline GridFunction apply_kms_flow(const GridFunction& f, const KmsFlowDescriptor& d) {
    f.validate_geometry();
    if (f.cfg.n != d.n || f.cfg.lambda != d.lambda)
        throw config_error("KMS flow descriptor does not match the grid configuration");
    GridFunction out = f;
    auto spec = detail::axis0_spectrum(f);
    const std::size_t n0 = static_cast<std::size_t>(f.axes[0].npts);
    const std::size_t nsp = f.spatial_size();
    detail::project_band(spec, f.axes[0], nsp, f.band_limit);
    for (std::size_t k = 0; k < n0; ++k) {
        const double p = bin_frequency(k, n0, f.axes[0].h);
        if (std::abs(p) > f.band_limit * (1.0 + 1e-12)) continue;
        const std::complex<double> m = d.frequency_multiplier(p);
        for (std::size_t sp = 0; sp < nsp; ++sp) spec[k * nsp + sp] *= m;
    }
    detail::axis0_inverse_into(spec, out);
    return out;
}

}  // namespace kappa
