#pragma once

#include <cmath>
#include <complex>

#include "kappa/errors.hpp"
#include "kappa/gamma.hpp"

namespace kappa {

struct Hyp2F1Result {
    cplx value{};
    double error = 0.0;
};

namespace detail {

inline bool exact_nonpositive_int(const cplx& z, long& m) {
    return near_nonpositive_int(z, 1e-12, m);
}

// Gauss series sum_k (a)_k (b)_k / ((c)_k k!) x^k; requires |x| < 1 or a
// terminating upper parameter.
inline Hyp2F1Result hyp_series(const cplx& a, const cplx& b, const cplx& c, const cplx& x,
                               double tol, int max_terms = 4000) {
    cplx term(1.0, 0.0), sum(1.0, 0.0);
    double err = 0.0;
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        cplx dk = static_cast<double>(k);
        term *= (a + dk) * (b + dk) / ((c + dk) * (static_cast<double>(k) + 1.0)) * x;
        sum += term;
        double mag = std::abs(term);
        if (mag <= tol * std::max(1.0, std::abs(sum)))
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 2) {
            err = mag / std::max(1e-300, 1.0 - std::abs(x));
            return {sum, err};
        }
    }
    throw non_convergence_error("2F1 series did not converge");
}

// Series or Pfaff-transformed series, whichever argument is smaller.
inline Hyp2F1Result hyp_small(const cplx& a, const cplx& b, const cplx& c, const cplx& x,
                              double tol) {
    long m = 0;
    if (exact_nonpositive_int(a, m) || exact_nonpositive_int(b, m))
        return hyp_series(a, b, c, x, tol);
    if (std::abs(x) <= 0.9) return hyp_series(a, b, c, x, tol);
    cplx u = x / (x - 1.0);
    if (std::abs(u) > 0.95)
        throw unsupported_region_error("2F1 argument too close to the w=1 singular point");
    auto inner = hyp_series(a, c - b, c, u, tol);
    cplx pref = std::pow(1.0 - x, -a);
    return {pref * inner.value, std::abs(pref) * inner.error};
}

// Two-term connection formula in 1/w, nondegenerate case (b-a not near an
// integer). Inner evaluations dispatch through hyp_small, so the path is
// usable at any w < 0 away from b-a integer.
inline Hyp2F1Result hyp_inversion_generic(const cplx& a, const cplx& b, const cplx& c, double w,
                                          double tol) {
    cplx y = 1.0 / w;
    cplx gc = gamma_fn(c);
    cplx t1 = gc * gamma_fn(b - a) * recip_gamma(b) * recip_gamma(c - a) *
              std::pow(cplx(-w, 0.0), -a);
    cplx t2 = gc * gamma_fn(a - b) * recip_gamma(a) * recip_gamma(c - b) *
              std::pow(cplx(-w, 0.0), -b);
    auto f1 = hyp_small(a, a - c + 1.0, a - b + 1.0, y, tol);
    auto f2 = hyp_small(b, b - c + 1.0, b - a + 1.0, y, tol);
    cplx value = t1 * f1.value + t2 * f2.value;
    double err = std::abs(t1) * f1.error + std::abs(t2) * f2.error +
                 1e-15 * (std::abs(t1 * f1.value) + std::abs(t2 * f2.value));
    return {value, err};
}

// Degenerate / near-degenerate connection formula at b = a + m + eps with m
// a nonnegative integer and |eps| small. The two divergent-as-eps->0 pieces
// are grouped term by term; at eps = 0 the grouped coefficient becomes the
// derivative (digamma) form, and for small nonzero eps the same grouping is
// an exact rearrangement that confines cancellation to one subtraction.
inline Hyp2F1Result hyp_inversion_degenerate(const cplx& a, const cplx& c, long m, cplx eps,
                                             double w, double tol) {
    const double pi = pi_const;
    cplx y = 1.0 / w;
    double log_mw = std::log(-w);
    cplx gc = gamma_fn(c);
    cplx pref_a = gc * std::pow(cplx(-w, 0.0), -a);
    bool at_limit = std::abs(eps) < 1e-13;

    // Finite part: first m terms of the T1 series.
    cplx t1fin(0.0, 0.0);
    if (m >= 1) {
        cplx coef = gamma_fn(static_cast<double>(m) + eps) *
                    recip_gamma(a + static_cast<double>(m) + eps) * recip_gamma(c - a);
        cplx term(1.0, 0.0);  // (a)_j (a-c+1)_j / ((1-m-eps)_j j!) y^j
        cplx sum = term;
        for (long j = 1; j < m; ++j) {
            cplx dj = static_cast<double>(j - 1);
            term *= (a + dj) * (a - c + 1.0 + dj) /
                    ((1.0 - static_cast<double>(m) - eps + dj) * static_cast<double>(j)) * y;
            sum += term;
        }
        t1fin = pref_a * coef * sum;
    }

    // Log-series part.
    cplx md = static_cast<double>(m);
    cplx ym(1.0, 0.0);
    for (long i = 0; i < m; ++i) ym *= y;
    cplx p = pref_a * ym;
    const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
    cplx rg_ca = recip_gamma(c - a);
    cplx rg_a = recip_gamma(a);
    cplx sum(0.0, 0.0);
    double trunc_err = 0.0, amp = 0.0;
    cplx geps(1.0, 0.0), heps(1.0, 0.0), pow_mw_eps(1.0, 0.0);
    cplx rg_am_eps{}, rg_cam_eps{};
    if (!at_limit) {
        geps = gamma_fn(1.0 + eps) * gamma_fn(1.0 - eps);
        cplx se = std::sin(pi * eps);
        heps = pi * eps / se;
        pow_mw_eps = std::exp(-eps * log_mw);
        rg_am_eps = recip_gamma(a + md + eps);
        rg_cam_eps = recip_gamma(c - a - md - eps);
    }
    const int max_terms = 400;
    cplx yk(1.0, 0.0);
    int small_streak = 0;
    for (int k = 0; k < max_terms; ++k) {
        double fact_mk = 1.0, fact_k = 1.0;
        for (long i = 2; i <= m + k; ++i) fact_mk *= static_cast<double>(i);
        for (long i = 2; i <= k; ++i) fact_k *= static_cast<double>(i);
        cplx pa_mk = poch_value(a, static_cast<int>(m) + k);
        cplx pac_mk = poch_value(a - c + 1.0, static_cast<int>(m) + k);
        cplx ck;
        if (at_limit) {
            cplx a_part = sgn * pa_mk * pac_mk * rg_ca / fact_mk *
                          (-psi_over_gamma(a + md) / fact_k +
                           recip_gamma(a + md) * psi_over_gamma(cplx(k + 1.0)));
            cplx u1 = poch_value(a + md, k), du1 = poch_derivative(a + md, k);
            cplx u2 = poch_value(a + md - c + 1.0, k), du2 = poch_derivative(a + md - c + 1.0, k);
            cplx v1 = recip_gamma(cplx(1.0 + m + k)), dv1 = -psi_over_gamma(cplx(1.0 + m + k));
            cplx v2 = recip_gamma(c - a - md), dv2 = psi_over_gamma(c - a - md);
            cplx b_part = rg_a / fact_k *
                          (-log_mw * u1 * u2 * v1 * v2 + du1 * u2 * v1 * v2 + u1 * du2 * v1 * v2 +
                           u1 * u2 * dv1 * v2 + u1 * u2 * v1 * dv2);
            ck = a_part - b_part;
        } else {
            cplx ak = sgn * geps * pa_mk * pac_mk * rg_am_eps * rg_ca *
                      recip_gamma(cplx(k + 1.0) - eps) / fact_mk;
            cplx bk = rg_a / fact_k * pow_mw_eps * poch_value(a + md + eps, k) *
                      poch_value(a + md - c + 1.0 + eps, k) *
                      recip_gamma(cplx(1.0 + m + k) + eps) * rg_cam_eps;
            ck = (ak - heps * bk) / eps;
            amp += std::abs(ak * yk) / std::abs(eps);
        }
        cplx incr = ck * yk;
        sum += incr;
        double mag = std::abs(incr);
        if (mag <= tol * std::max(1.0, std::abs(sum)))
            ++small_streak;
        else
            small_streak = 0;
        if (small_streak >= 3) {
            trunc_err = mag * 2.0;
            break;
        }
        yk *= y;
        if (k == max_terms - 1) throw non_convergence_error("degenerate 2F1 series stalled");
    }
    cplx value = t1fin + p * sum;
    double err = std::abs(p) * (trunc_err + 1e-16 * amp) + 1e-15 * std::abs(value);
    return {value, err};
}

}  // namespace detail

/// Evaluation path: plain Gauss series (|w| <= 0.9 or terminating).
inline Hyp2F1Result hyp2f1_series(const cplx& a, const cplx& b, const cplx& c, double w,
                                  double tol = 1e-12) {
    return detail::hyp_series(a, b, c, cplx(w, 0.0), tol);
}

/// Evaluation path: connection formula in 1/w (degenerate-aware).
inline Hyp2F1Result hyp2f1_inversion(const cplx& a_in, const cplx& b_in, const cplx& c,
                                     double w, double tol = 1e-12) {
    cplx a = a_in, b = b_in;
    if ((b - a).real() < 0.0) std::swap(a, b);
    cplx d = b - a;
    long m = std::lround(d.real());
    cplx eps = d - static_cast<double>(m);
    if (m >= 0 && std::abs(eps) <= 0.05)
        return detail::hyp_inversion_degenerate(a, c, m, eps, w, tol);
    return detail::hyp_inversion_generic(a, b, c, w, tol);
}

/// Gauss hypergeometric 2F1(a, b; c; w) for real w <= 0.
/// Dispatch: terminating series when a or b is a nonpositive integer;
/// direct series for |w| <= 0.9; Pfaff transformation for 0.9 < |w| < 2;
/// connection formula in 1/w for |w| >= 2, switching to the digamma limit
/// form when b - a is (near) an integer.
inline Hyp2F1Result hyp2f1(const cplx& a, const cplx& b, const cplx& c, double w,
                           double tol = 1e-12) {
    long m = 0;
    if (detail::exact_nonpositive_int(c, m))
        throw hyp_c_pole_error("2F1 lower parameter at nonpositive integer");
    if (!(w <= 0.0)) throw unsupported_region_error("2F1 implemented for real w <= 0 only");
    if (w == 0.0) return {cplx(1.0, 0.0), 0.0};
    if (detail::exact_nonpositive_int(a, m) || detail::exact_nonpositive_int(b, m))
        return detail::hyp_series(a, b, c, cplx(w, 0.0), tol);
    if (std::abs(w) < 2.0) return detail::hyp_small(a, b, c, cplx(w, 0.0), tol);
    return hyp2f1_inversion(a, b, c, w, tol);
}

}  // namespace kappa
