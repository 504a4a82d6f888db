#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/fft.hpp"
#include "kappa/lie_group.hpp"
#include "kappa/parallel.hpp"

namespace kappa {

/// Uniform periodic-style grid x_i = x0 + i h, i = 0..npts-1, period npts*h.
struct GridAxis {
    double x0 = 0.0;
    double h = 1.0;
    int npts = 0;

    double coord(int i) const { return x0 + h * static_cast<double>(i); }
    double xmax() const { return coord(npts - 1); }

    /// Grid covering [-half_width, half_width) with npts points (0 included
    /// when npts is even).
    static GridAxis centered(double half_width, int npts) {
        return {-half_width, 2.0 * half_width / static_cast<double>(npts), npts};
    }

    bool operator==(const GridAxis& o) const {
        return x0 == o.x0 && h == o.h && npts == o.npts;
    }
};

/// Sampled complex test function on the product grid, with asserted compact
/// axis-0 frequency support in [-band_limit, band_limit]. Values are
/// immutable after construction by convention: every operation allocates a
/// fresh result.
struct GridFunction {
    GroupConfig cfg;
    std::vector<GridAxis> axes;  // axes[0] = time axis, axes[1..] spatial
    std::vector<std::complex<double>> samples;  // axis-0 major
    double band_limit = 0.0;

    static constexpr double band_tolerance = 1e-10;
    static constexpr double overflow_budget = 1e100;

    std::size_t spatial_size() const {
        std::size_t s = 1;
        for (std::size_t a = 1; a < axes.size(); ++a) s *= static_cast<std::size_t>(axes[a].npts);
        return s;
    }
    std::size_t size() const { return static_cast<std::size_t>(axes[0].npts) * spatial_size(); }

    const std::complex<double>& at(int i0, std::size_t sp) const {
        return samples[static_cast<std::size_t>(i0) * spatial_size() + sp];
    }

    /// Decode flat spatial index into per-axis indices.
    void spatial_indices(std::size_t sp, std::vector<int>& idx) const {
        idx.resize(axes.size() - 1);
        for (std::size_t a = axes.size() - 1; a >= 1; --a) {
            idx[a - 1] = static_cast<int>(sp % static_cast<std::size_t>(axes[a].npts));
            sp /= static_cast<std::size_t>(axes[a].npts);
        }
    }

    double nyquist0() const { return 3.141592653589793238462643383279503 / axes[0].h; }

    void validate_geometry() const {
        cfg.validate();
        if (axes.size() != static_cast<std::size_t>(cfg.n))
            throw config_error("GridFunction: axis count must equal n");
        for (const auto& ax : axes)
            if (ax.npts < 4 || !(ax.h > 0.0)) throw config_error("GridFunction: bad axis");
        if (!(band_limit > 0.0)) throw config_error("GridFunction: band limit must be positive");
        if (nyquist0() < 2.0 * band_limit)
            throw band_error("axis-0 Nyquist frequency below twice the band limit");
        if (samples.size() != size()) throw config_error("GridFunction: sample count mismatch");
    }
};

namespace detail {

/// Axis-0 DFT of every grid line; bins in FFT order along axis 0.
inline std::vector<std::complex<double>> axis0_spectrum(const GridFunction& f) {
    const std::size_t n0 = static_cast<std::size_t>(f.axes[0].npts), nsp = f.spatial_size();
    std::vector<std::complex<double>> out(f.samples.size());
    parallel_for(nsp, [&](std::size_t sp) {
        std::vector<std::complex<double>> line(n0);
        for (std::size_t i = 0; i < n0; ++i) line[i] = f.samples[i * nsp + sp];
        dft(line, false);
        for (std::size_t k = 0; k < n0; ++k) out[k * nsp + sp] = line[k];
    });
    return out;
}

inline void axis0_inverse_into(std::vector<std::complex<double>>& spectrum, GridFunction& f) {
    const std::size_t n0 = static_cast<std::size_t>(f.axes[0].npts), nsp = f.spatial_size();
    parallel_for(nsp, [&](std::size_t sp) {
        std::vector<std::complex<double>> line(n0);
        for (std::size_t k = 0; k < n0; ++k) line[k] = spectrum[k * nsp + sp];
        dft(line, true);
        for (std::size_t i = 0; i < n0; ++i) f.samples[i * nsp + sp] = line[i];
    });
}

/// Relative l2 mass of the spectrum outside [-B, B], and zeroing of those
/// bins. Returns the relative out-of-band mass before zeroing.
inline double project_band(std::vector<std::complex<double>>& spectrum, const GridAxis& ax0,
                           std::size_t nsp, double band) {
    const std::size_t n0 = static_cast<std::size_t>(ax0.npts);
    double out_mass = 0.0, total = 0.0;
    for (std::size_t k = 0; k < n0; ++k) {
        double p = bin_frequency(k, n0, ax0.h);
        bool outside = std::abs(p) > band * (1.0 + 1e-12);
        for (std::size_t sp = 0; sp < nsp; ++sp) {
            double m = std::norm(spectrum[k * nsp + sp]);
            total += m;
            if (outside) {
                out_mass += m;
                spectrum[k * nsp + sp] = 0.0;
            }
        }
    }
    return total > 0.0 ? std::sqrt(out_mass / total) : 0.0;
}

}  // namespace detail

/// Sample f(x0, xvec) on the given grid; checks the band invariant and
/// projects residual out-of-band mass away (mass above band_tolerance is an
/// error: the function is not in the compactly-supported-frequency class).
inline GridFunction make_grid_function(const GroupConfig& cfg, const std::vector<GridAxis>& axes,
                                       double band_limit,
                                       const std::function<std::complex<double>(
                                           double, const std::vector<double>&)>& fn) {
    GridFunction f;
    f.cfg = cfg;
    f.axes = axes;
    f.band_limit = band_limit;
    f.samples.resize(f.size());
    f.validate_geometry();
    const std::size_t nsp = f.spatial_size();
    const std::size_t n0 = static_cast<std::size_t>(axes[0].npts);
    parallel_for(n0, [&](std::size_t i0) {
        std::vector<double> xs(axes.size() - 1);
        std::vector<int> idx;
        for (std::size_t sp = 0; sp < nsp; ++sp) {
            f.spatial_indices(sp, idx);
            for (std::size_t a = 0; a + 1 < axes.size(); ++a)
                xs[a] = axes[a + 1].coord(idx[a]);
            f.samples[i0 * nsp + sp] = fn(axes[0].coord(static_cast<int>(i0)), xs);
        }
    });
    auto spec = detail::axis0_spectrum(f);
    double mass = detail::project_band(spec, f.axes[0], nsp, band_limit);
    if (mass > GridFunction::band_tolerance)
        throw band_error("sampled function violates the axis-0 band limit");
    detail::axis0_inverse_into(spec, f);
    return f;
}

/// Out-of-band relative mass (diagnostic form of the band invariant).
inline double band_mass_outside(const GridFunction& f) {
    auto spec = detail::axis0_spectrum(f);
    return detail::project_band(spec, f.axes[0], f.spatial_size(), f.band_limit);
}

inline void require_same_grids(const GridFunction& a, const GridFunction& b) {
    if (a.cfg.n != b.cfg.n || a.cfg.lambda != b.cfg.lambda || a.axes.size() != b.axes.size())
        throw config_error("grid functions on different configurations");
    for (std::size_t i = 0; i < a.axes.size(); ++i)
        if (!(a.axes[i] == b.axes[i])) throw config_error("grid functions on different grids");
}

/// alpha f + beta g (exact linear grid operation).
inline GridFunction linear_combination(const std::complex<double>& alpha, const GridFunction& f,
                                       const std::complex<double>& beta, const GridFunction& g) {
    require_same_grids(f, g);
    GridFunction out = f;
    out.band_limit = std::max(f.band_limit, g.band_limit);
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = alpha * f.samples[i] + beta * g.samples[i];
    return out;
}

inline GridFunction scale(const std::complex<double>& alpha, const GridFunction& f) {
    GridFunction out = f;
    for (auto& v : out.samples) v *= alpha;
    return out;
}

/// Pointwise product (the lambda = 0 star product); band limits add.
inline GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
    require_same_grids(f, g);
    GridFunction out = f;
    out.band_limit = f.band_limit + g.band_limit;
    if (out.nyquist0() < 2.0 * out.band_limit)
        throw band_error("pointwise product band exceeds the grid Nyquist budget");
    for (std::size_t i = 0; i < out.samples.size(); ++i)
        out.samples[i] = f.samples[i] * g.samples[i];
    return out;
}

/// Weight (plain integral) with a quadrature error estimate.
struct WeightValue {
    std::complex<double> value{};
    double quadrature_error = 0.0;
};

inline WeightValue weight_omega(const GridFunction& f) {
    double vol = 1.0;
    for (const auto& ax : f.axes) vol *= ax.h;
    std::complex<double> sum{};
    double l1 = 0.0;
    for (const auto& v : f.samples) {
        sum += v;
        l1 += std::abs(v);
    }
    // Boundary probe: largest magnitude on the outermost axis-0 slices and
    // on the outermost spatial shell.
    double boundary = 0.0;
    const std::size_t nsp = f.spatial_size();
    const int n0 = f.axes[0].npts;
    for (std::size_t sp = 0; sp < nsp; ++sp) {
        boundary = std::max(boundary, std::abs(f.at(0, sp)));
        boundary = std::max(boundary, std::abs(f.at(n0 - 1, sp)));
    }
    std::vector<int> idx;
    for (std::size_t sp = 0; sp < nsp; ++sp) {
        f.spatial_indices(sp, idx);
        bool shell = false;
        for (std::size_t a = 0; a < idx.size(); ++a)
            if (idx[a] == 0 || idx[a] == f.axes[a + 1].npts - 1) shell = true;
        if (!shell) continue;
        for (int i0 = 0; i0 < n0; i0 += std::max(1, n0 / 8))
            boundary = std::max(boundary, std::abs(f.at(i0, sp)));
    }
    WeightValue w;
    w.value = sum * vol;
    w.quadrature_error = boundary * vol * static_cast<double>(f.samples.size()) * 1e-3 +
                         1e-15 * l1 * vol;
    return w;
}

/// Imaginary time shift x0 -> x0 + i s lambda realized as the axis-0
/// Fourier multiplier e^{-s lambda p0}; out-of-band bins are zeroed first
/// (they carry <= band_tolerance mass but would be amplified).
inline GridFunction modular_shift(const GridFunction& f, double s) {
    f.validate_geometry();
    const double expo = std::abs(s) * f.cfg.lambda * f.band_limit;
    if (std::exp(expo) > GridFunction::overflow_budget)
        throw modular_overflow_error("modular shift amplification exceeds overflow budget");
    GridFunction out = f;
    auto spec = detail::axis0_spectrum(f);
    const std::size_t nsp = f.spatial_size();
    detail::project_band(spec, f.axes[0], nsp, f.band_limit);
    const std::size_t n0 = static_cast<std::size_t>(f.axes[0].npts);
    for (std::size_t k = 0; k < n0; ++k) {
        double p = bin_frequency(k, n0, f.axes[0].h);
        if (std::abs(p) > f.band_limit * (1.0 + 1e-12)) continue;
        double mult = std::exp(-s * f.cfg.lambda * p);
        for (std::size_t sp = 0; sp < nsp; ++sp) spec[k * nsp + sp] *= mult;
    }
    detail::axis0_inverse_into(spec, out);
    return out;
}

inline double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (const auto& v : f.samples) m = std::max(m, std::abs(v));
    return m;
}

inline double sup_distance(const GridFunction& f, const GridFunction& g) {
    require_same_grids(f, g);
    double m = 0.0;
    for (std::size_t i = 0; i < f.samples.size(); ++i)
        m = std::max(m, std::abs(f.samples[i] - g.samples[i]));
    return m;
}

}  // namespace kappa
