#pragma once

#include <complex>
#include <vector>

namespace kappa {

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double pi = 3.141592653589793238462643383279503;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = 2.0 * pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j], v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

inline void dft_naive(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    const double pi = 3.141592653589793238462643383279503;
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            double ang = 2.0 * pi * static_cast<double>(k * j % n) / static_cast<double>(n) *
                         (inverse ? 1.0 : -1.0);
            acc += a[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    a.swap(out);
}

}  // namespace detail

/// In-place DFT, sum_j a_j e^{-2 pi i k j / N}; radix-2 when N is a power of
/// two, O(N^2) fallback otherwise. Grid sizes here stay in the hundreds.
inline void dft(std::vector<std::complex<double>>& a, bool inverse = false) {
    if (a.size() <= 1) return;
    if (detail::is_pow2(a.size()))
        detail::fft_radix2(a, inverse);
    else
        detail::dft_naive(a, inverse);
    if (inverse) {
        double s = 1.0 / static_cast<double>(a.size());
        for (auto& v : a) v *= s;
    }
}

/// Signed frequency index for bin k of an N-point DFT: 0..N/2-1, then
/// negative frequencies.
inline long signed_index(std::size_t k, std::size_t n) {
    return (k < (n + 1) / 2) ? static_cast<long>(k)
                             : static_cast<long>(k) - static_cast<long>(n);
}

/// Angular frequency of bin k for grid spacing h.
inline double bin_frequency(std::size_t k, std::size_t n, double h) {
    const double pi = 3.141592653589793238462643383279503;
    return 2.0 * pi * static_cast<double>(signed_index(k, n)) / (static_cast<double>(n) * h);
}

}  // namespace kappa
