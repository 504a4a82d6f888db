#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "kappa/errors.hpp"

namespace kappa {

using rat = mpq_class;

/// Exact rational from numerator/denominator (canonicalized).
inline rat make_rat(long num, long den = 1) {
    if (den == 0) throw config_error("rational with zero denominator");
    rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "a/b", "-3", "0.75" into an exact rational.
inline rat rat_from_string(const std::string& s) {
    std::string str = s;
    if (str.empty()) throw config_error("empty rational literal");
    auto slash = str.find('/');
    if (slash != std::string::npos) {
        rat q(str);
        q.canonicalize();
        return q;
    }
    auto dot = str.find('.');
    if (dot == std::string::npos) {
        rat q(str);
        q.canonicalize();
        return q;
    }
    std::string head = str.substr(0, dot), tail = str.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : head + tail)
        if (c < '0' || c > '9') throw config_error("bad rational literal: " + s);
    mpz_class num(head + tail);
    mpz_class den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    rat q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

/// Gaussian rational re + im*i with exact components.
struct GaussRat {
    rat re{0}, im{0};

    GaussRat() = default;
    GaussRat(rat r) : re(std::move(r)) {}
    GaussRat(rat r, rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat unit_i() { return {rat(0), rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat conj() const { return {re, -im}; }
    GaussRat times_i() const { return {-im, re}; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }

    GaussRat inverse() const {
        rat n = re * re + im * im;
        if (n == 0) throw config_error("division by zero Gaussian rational");
        return {re / n, -im / n};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    double re_double() const { return re.get_d(); }
    double im_double() const { return im.get_d(); }
};

inline GaussRat operator*(const rat& s, const GaussRat& g) { return {s * g.re, s * g.im}; }

/// Gaussian integer, used by the fraction-free elimination kernel.
struct GaussInt {
    mpz_class re{0}, im{0};

    GaussInt() = default;
    GaussInt(mpz_class r) : re(std::move(r)) {}
    GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussInt& o) const { return re == o.re && im == o.im; }

    /// Exact division, valid only when o divides *this in Z[i].
    GaussInt div_exact(const GaussInt& o) const {
        mpz_class den = o.re * o.re + o.im * o.im;
        mpz_class nre = re * o.re + im * o.im;
        mpz_class nim = im * o.re - re * o.im;
        GaussInt q;
        mpz_divexact(q.re.get_mpz_t(), nre.get_mpz_t(), den.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), nim.get_mpz_t(), den.get_mpz_t());
        return q;
    }
};

inline std::string to_string(const rat& q) { return q.get_str(); }

/// Render re + im*i compactly: "3/2", "-i", "1/2+2i", "1-3/4i".
inline std::string to_string(const GaussRat& g) {
    if (g.is_zero()) return "0";
    std::string s;
    if (g.re != 0) s += g.re.get_str();
    if (g.im != 0) {
        if (g.im > 0 && !s.empty()) s += "+";
        if (g.im == 1)
            s += "i";
        else if (g.im == -1)
            s += "-i";
        else
            s += g.im.get_str() + "i";
    }
    return s;
}

}  // namespace kappa
