#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kappa/errors.hpp"
#include "kappa/rational.hpp"

namespace kappa {

/// Exponent multi-index (a1, ..., an) of a normally ordered monomial
/// x1^a1 x2^a2 ... xn^an (x1 leftmost).
using Mono = std::vector<unsigned>;

inline unsigned mono_degree(const Mono& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

/// Canonical term order: total degree ascending, then lexicographic.
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Structure constants: T stands for i*lambda, U for i*mu, held exactly in
/// Q[i]. The only relation is [x1, xj] = T xj for j >= 2; x2..xn commute.
struct PBWParams {
    int n = 2;
    GaussRat T;  // i * lambda
    GaussRat U;  // i * mu

    void validate() const {
        if (n < 2) throw config_error("PBWParams: need at least two generators");
    }
    static PBWParams from_rationals(int n, const rat& lambda, const rat& mu) {
        PBWParams p;
        p.n = n;
        p.T = GaussRat(rat(0), lambda);
        p.U = GaussRat(rat(0), mu);
        p.validate();
        return p;
    }
};

struct PBWElement {
    int n = 2;
    std::map<Mono, GaussRat, MonoLess> terms;

    static PBWElement zero(int n) { return PBWElement{n, {}}; }
    static PBWElement scalar(int n, const GaussRat& c) {
        PBWElement p{n, {}};
        if (!c.is_zero()) p.terms[Mono(static_cast<std::size_t>(n), 0u)] = c;
        return p;
    }
    static PBWElement monomial(int n, const Mono& m, const GaussRat& c) {
        if (static_cast<int>(m.size()) != n) throw config_error("monomial arity mismatch");
        PBWElement p{n, {}};
        if (!c.is_zero()) p.terms[m] = c;
        return p;
    }
    static PBWElement generator(int n, int j) {
        if (j < 1 || j > n) throw config_error("generator index out of range");
        Mono m(static_cast<std::size_t>(n), 0u);
        m[static_cast<std::size_t>(j - 1)] = 1u;
        return monomial(n, m, GaussRat(rat(1), rat(0)));
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const Mono& m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    bool operator==(const PBWElement& o) const { return n == o.n && terms == o.terms; }
};

inline PBWElement add(const PBWElement& p, const PBWElement& q) {
    if (p.n != q.n) throw config_error("adding PBW elements of different arity");
    PBWElement r = p;
    for (const auto& [m, c] : q.terms) r.add_term(m, c);
    return r;
}

inline PBWElement scale(const GaussRat& c, const PBWElement& p) {
    PBWElement r = PBWElement::zero(p.n);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : p.terms) r.terms[m] = c * a;
    return r;
}

inline PBWElement sub(const PBWElement& p, const PBWElement& q) {
    return add(p, scale(GaussRat(rat(-1), rat(0)), q));
}

namespace detail {

inline GaussRat gauss_pow(const GaussRat& c, unsigned k) {
    GaussRat r(rat(1), rat(0));
    for (unsigned i = 0; i < k; ++i) r = r * c;
    return r;
}

inline rat binomial(unsigned nn, unsigned kk) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), nn, kk);
    return rat(b);
}

/// Normal-order product of two monomials. Moving x1^b1 through the spatial
/// block x2^a2...xn^an uses x2..xn-block x1 = (x1 - |A| T) block, where |A|
/// is the total spatial degree of the left factor:
///   (x1^a1 A) (x1^b1 B) = sum_k C(b1,k) (-|A| T)^{b1-k} x1^{a1+k} A B.
inline void monomial_product_into(PBWElement& out, const Mono& a, const Mono& b,
                                  const GaussRat& coeff, const PBWParams& par) {
    const std::size_t n = a.size();
    unsigned spatial_deg = 0;
    for (std::size_t j = 1; j < n; ++j) spatial_deg += a[j];
    Mono merged(n);
    merged[0] = 0;
    for (std::size_t j = 1; j < n; ++j) merged[j] = a[j] + b[j];
    const GaussRat shift = GaussRat(rat(-static_cast<long>(spatial_deg)), rat(0)) * par.T;
    for (unsigned k = 0; k <= b[0]; ++k) {
        GaussRat c = coeff * GaussRat(binomial(b[0], k), rat(0)) * gauss_pow(shift, b[0] - k);
        Mono m = merged;
        m[0] = a[0] + k;
        out.add_term(m, c);
    }
}

}  // namespace detail

inline PBWElement multiply(const PBWElement& p, const PBWElement& q, const PBWParams& par) {
    if (p.n != q.n || p.n != par.n) throw config_error("PBW multiply arity mismatch");
    PBWElement out = PBWElement::zero(p.n);
    for (const auto& [ma, ca] : p.terms)
        for (const auto& [mb, cb] : q.terms)
            detail::monomial_product_into(out, ma, mb, ca * cb, par);
    return out;
}

/// Normal form of a scaled word in the generators (indices 1..n).
inline PBWElement normal_form(const std::vector<int>& word, const GaussRat& scale_coeff,
                              const PBWParams& par) {
    PBWElement out = PBWElement::scalar(par.n, scale_coeff);
    for (int j : word) out = multiply(out, PBWElement::generator(par.n, j), par);
    return out;
}

/// Automorphism substituting x1 -> x1 + u (u central); fixes x2..xn.
inline PBWElement sigma_shift(const PBWElement& p, const GaussRat& u) {
    PBWElement out = PBWElement::zero(p.n);
    for (const auto& [m, c] : p.terms) {
        for (unsigned k = 0; k <= m[0]; ++k) {
            GaussRat cc = c * GaussRat(detail::binomial(m[0], k), rat(0)) *
                          detail::gauss_pow(u, m[0] - k);
            Mono mm = m;
            mm[0] = k;
            out.add_term(mm, cc);
        }
    }
    return out;
}

/// The weight automorphism sigma_mu: x1 -> x1 + U.
inline PBWElement sigma_mu(const PBWElement& p, const GaussRat& U) { return sigma_shift(p, U); }

/// Twisted adjoint action of generator x_j on m: sigma(x_j) m - m x_j, with
/// sigma the shift x1 -> x1 + u (so only j = 1 picks up the shift term).
inline PBWElement twisted_adjoint(int j, const PBWElement& m, const GaussRat& u,
                                  const PBWParams& par) {
    PBWElement xj = PBWElement::generator(par.n, j);
    PBWElement left = multiply(xj, m, par);
    if (j == 1) left = add(left, scale(u, m));
    return sub(left, multiply(m, xj, par));
}

/// Generators of the translation-sector action.
struct ActionElement {
    enum Kind { P0, Pj, E, Einv } kind = P0;
    int j = 2;  // spatial index for Pj (2..n)

    static ActionElement p0() { return {P0, 0}; }
    static ActionElement pj(int j) { return {Pj, j}; }
    static ActionElement e() { return {E, 0}; }
    static ActionElement e_inverse() { return {Einv, 0}; }
};

/// Hopf action on normally ordered monomials:
///   P0 |> x1^a A      = -i a x1^{a-1} A            (primitive derivation)
///   Pj |> x1^a A      = -i A_j (x1+T)^a A / x_j    (twisted derivation)
///   E  |> m           = m with x1 -> x1 + T        (grouplike automorphism)
///   E^{-1} |> m       = m with x1 -> x1 - T.
inline PBWElement act_generator(const ActionElement& h, const PBWElement& p,
                                const PBWParams& par) {
    if (p.n != par.n) throw config_error("action arity mismatch");
    const GaussRat minus_i(rat(0), rat(-1));
    switch (h.kind) {
        case ActionElement::E:
            return sigma_shift(p, par.T);
        case ActionElement::Einv:
            return sigma_shift(p, GaussRat(rat(-1), rat(0)) * par.T);
        case ActionElement::P0: {
            PBWElement out = PBWElement::zero(p.n);
            for (const auto& [m, c] : p.terms) {
                if (m[0] == 0) continue;
                Mono mm = m;
                mm[0] -= 1;
                out.add_term(mm, c * minus_i * GaussRat(rat(static_cast<long>(m[0])), rat(0)));
            }
            return out;
        }
        case ActionElement::Pj: {
            if (h.j < 2 || h.j > par.n) throw config_error("Pj index out of range");
            const std::size_t jj = static_cast<std::size_t>(h.j - 1);
            PBWElement out = PBWElement::zero(p.n);
            for (const auto& [m, c] : p.terms) {
                if (m[jj] == 0) continue;
                Mono mm = m;
                mm[jj] -= 1;
                GaussRat cc = c * minus_i * GaussRat(rat(static_cast<long>(m[jj])), rat(0));
                // (x1 + T)^{a1} replaces x1^{a1}: binomial in the shift.
                for (unsigned k = 0; k <= m[0]; ++k) {
                    Mono mk = mm;
                    mk[0] = k;
                    out.add_term(mk, cc * GaussRat(detail::binomial(m[0], k), rat(0)) *
                                         detail::gauss_pow(par.T, m[0] - k));
                }
            }
            return out;
        }
    }
    throw config_error("unknown action element");
}

/// h |> (p q) - sum (h^(1) |> p)(h^(2) |> q) with the coproducts
/// Delta(P0) = P0 x 1 + 1 x P0,  Delta(Pj) = Pj x 1 + E x Pj,
/// Delta(E) = E x E. Identically zero: the algebra is a module algebra.
inline PBWElement module_algebra_residual(const ActionElement& h, const PBWElement& p,
                                          const PBWElement& q, const PBWParams& par) {
    PBWElement lhs = act_generator(h, multiply(p, q, par), par);
    PBWElement rhs = PBWElement::zero(par.n);
    switch (h.kind) {
        case ActionElement::P0:
            rhs = add(multiply(act_generator(h, p, par), q, par),
                      multiply(p, act_generator(h, q, par), par));
            break;
        case ActionElement::Pj:
            rhs = add(multiply(act_generator(h, p, par), q, par),
                      multiply(act_generator(ActionElement::e(), p, par),
                               act_generator(h, q, par), par));
            break;
        case ActionElement::E:
        case ActionElement::Einv:
            rhs = multiply(act_generator(h, p, par), act_generator(h, q, par), par);
            break;
    }
    return sub(lhs, rhs);
}

/// Text form: sum of `coeff * i^k * x1^a1 ... xn^an` terms (k in {0,1}),
/// canonical degree-then-lex order; the zero element prints as "0".
inline std::string to_text(const PBWElement& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const rat& r, int k, const Mono& m) {
        if (r == 0) return;
        if (!first) os << " + ";
        first = false;
        os << to_string(r) << " * i^" << k << " *";
        for (std::size_t j = 0; j < m.size(); ++j) os << " x" << (j + 1) << "^" << m[j];
    };
    for (const auto& [m, c] : p.terms) {
        emit(c.re, 0, m);
        emit(c.im, 1, m);
    }
    return os.str();
}

inline PBWElement parse_pbw_text(const std::string& text, int n) {
    PBWElement out = PBWElement::zero(n);
    std::string s;
    for (char ch : text)
        if (ch != '\n' && ch != '\r') s += ch;
    // Trim.
    auto trim = [](std::string v) {
        std::size_t b = v.find_first_not_of(' ');
        std::size_t e = v.find_last_not_of(' ');
        if (b == std::string::npos) return std::string();
        return v.substr(b, e - b + 1);
    };
    if (trim(s) == "0" || trim(s).empty()) return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string term = trim(next == std::string::npos ? s.substr(pos)
                                                          : s.substr(pos, next - pos));
        pos = next == std::string::npos ? s.size() : next + 3;
        if (term.empty()) continue;
        // coeff * i^k * x1^a1 ...
        std::size_t s1 = term.find('*');
        std::size_t s2 = term.find('*', s1 + 1);
        if (s1 == std::string::npos || s2 == std::string::npos)
            throw error("malformed PBW term: '" + term + "'");
        rat coeff = rat_from_string(trim(term.substr(0, s1)));
        std::string ipart = trim(term.substr(s1 + 1, s2 - s1 - 1));
        if (ipart.rfind("i^", 0) != 0) throw error("malformed i power in '" + term + "'");
        int k = std::stoi(ipart.substr(2));
        std::string mono_part = trim(term.substr(s2 + 1));
        Mono m(static_cast<std::size_t>(n), 0u);
        std::istringstream ms(mono_part);
        std::string tok;
        while (ms >> tok) {
            std::size_t caret = tok.find('^');
            if (tok.empty() || tok[0] != 'x' || caret == std::string::npos)
                throw error("malformed monomial factor '" + tok + "'");
            int idx = std::stoi(tok.substr(1, caret - 1));
            unsigned expo = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
            if (idx < 1 || idx > n) throw error("generator index out of range in text");
            m[static_cast<std::size_t>(idx - 1)] += expo;
        }
        GaussRat c = (k % 4 == 0)   ? GaussRat(coeff, rat(0))
                     : (k % 4 == 1) ? GaussRat(rat(0), coeff)
                     : (k % 4 == 2) ? GaussRat(-coeff, rat(0))
                                    : GaussRat(rat(0), -coeff);
        out.add_term(m, c);
    }
    return out;
}

}  // namespace kappa
