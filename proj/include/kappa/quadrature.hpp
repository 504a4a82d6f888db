#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <vector>

namespace kappa {

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    std::size_t panels = 0;
};

namespace gk {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1].
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F>
void panel(const F& f, double a, double b, T& value, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    T resk{}, resg{};
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            T fc = f(c);
            resk += wgk[7] * fc;
            resg += wg[3] * fc;
            break;
        }
        T fsum = f(c - h * xgk[i]) + f(c + h * xgk[i]);
        resk += wgk[i] * fsum;
        if (i % 2 == 1) resg += wg[i / 2] * fsum;
    }
    value = h * resk;
    err = std::abs(h * (resk - resg));
}

}  // namespace gk

/// Globally adaptive Gauss-Kronrod integration of f over [a, b].
/// Works for real or complex integrands; refines the worst panel first.
template <class T = double, class F>
QuadResult<T> integrate_adaptive(const F& f, double a, double b, double abs_tol = 1e-10,
                                 double rel_tol = 1e-10, std::size_t max_panels = 4000) {
    struct Panel {
        double a, b, err;
        T value;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    std::priority_queue<Panel> heap;
    T v{};
    double e = 0;
    gk::panel<T>(f, a, b, v, e);
    heap.push({a, b, e, v});
    T total = v;
    double total_err = e;
    std::size_t n = 1;
    while (n < max_panels) {
        double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_err <= tol) break;
        Panel worst = heap.top();
        heap.pop();
        double mid = 0.5 * (worst.a + worst.b);
        T v1{}, v2{};
        double e1 = 0, e2 = 0;
        gk::panel<T>(f, worst.a, mid, v1, e1);
        gk::panel<T>(f, mid, worst.b, v2, e2);
        total += (v1 + v2) - worst.value;
        total_err += (e1 + e2) - worst.err;
        heap.push({worst.a, mid, e1, v1});
        heap.push({mid, worst.b, e2, v2});
        ++n;
    }
    return {total, total_err, n};
}

/// Integral over the whole real line via x = tan(u). The integrand must
/// decay faster than 1/x^2 so the transformed endpoint values vanish.
template <class T = double, class F>
QuadResult<T> integrate_real_line(const F& f, double abs_tol = 1e-10, double rel_tol = 1e-10,
                                  std::size_t max_panels = 4000) {
    const double half_pi = 1.5707963267948966;
    auto g = [&](double u) -> T {
        if (half_pi - std::abs(u) < 1e-12) return T{};
        double c = std::cos(u), x = std::tan(u);
        return f(x) / (c * c);
    };
    return integrate_adaptive<T>(g, -half_pi, half_pi, abs_tol, rel_tol, max_panels);
}

/// Integral over [a, inf) via x = a + tan(u).
template <class T = double, class F>
QuadResult<T> integrate_semi_axis(const F& f, double a, double abs_tol = 1e-10,
                                  double rel_tol = 1e-10, std::size_t max_panels = 4000) {
    const double half_pi = 1.5707963267948966;
    auto g = [&](double u) -> T {
        if (half_pi - u < 1e-12) return T{};
        double c = std::cos(u), x = a + std::tan(u);
        return f(x) / (c * c);
    };
    return integrate_adaptive<T>(g, 0.0, half_pi, abs_tol, rel_tol, max_panels);
}

/// Iterated adaptive integration of f(x[0..dim-1]) over a box. Inner axes
/// are integrated at a modestly tighter tolerance than the requested one.
template <class T = double>
QuadResult<T> integrate_box(const std::function<T(const std::vector<double>&)>& f,
                            const std::vector<double>& lo, const std::vector<double>& hi,
                            double abs_tol = 1e-10, double rel_tol = 1e-10,
                            std::size_t max_panels = 4000) {
    std::size_t dim = lo.size();
    std::vector<double> x(dim, 0.0);
    std::function<QuadResult<T>(std::size_t, double, double)> level =
        [&](std::size_t axis, double atol, double rtol) -> QuadResult<T> {
        auto g = [&](double xi) -> T {
            x[axis] = xi;
            if (axis + 1 == dim) return f(x);
            return level(axis + 1, atol * 0.5, rtol * 0.5).value;
        };
        return integrate_adaptive<T>(g, lo[axis], hi[axis], atol, rtol, max_panels);
    };
    return level(0, abs_tol, rel_tol);
}

}  // namespace kappa
