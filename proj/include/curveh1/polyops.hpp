#pragma once

#include <utility>

#include "curveh1/poly.hpp"
#include "curveh1/univariate.hpp"

namespace curveh1 {

/// Division with remainder by a single divisor, using the storage (grevlex)
/// order. The remainder has no term divisible by the divisor's leading
/// monomial.
template <class K>
std::pair<Poly<K>, Poly<K>> divide_single(const Poly<K>& f, const Poly<K>& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly<K> q(f.ring()), r(f.ring());
    Poly<K> work = f;
    const auto& glt = g.leading_term();
    while (!work.is_zero()) {
        const auto& wlt = work.leading_term();
        if (glt.first.divides(wlt.first)) {
            Monomial shift = glt.first.divide_into(wlt.first);
            K c = wlt.second / glt.second;
            Poly<K> t = Poly<K>::term(f.ring(), shift, c);
            q += t;
            work -= t * g;
        } else {
            r.add_term(wlt.first, wlt.second);
            Poly<K> t = Poly<K>::term(f.ring(), wlt.first, wlt.second);
            work -= t;
        }
    }
    return {q, r};
}

template <class K>
bool try_exact_divide(const Poly<K>& f, const Poly<K>& g, Poly<K>& out) {
    auto [q, r] = divide_single(f, g);
    if (!r.is_zero()) return false;
    out = q;
    return true;
}

template <class K>
Poly<K> exact_divide(const Poly<K>& f, const Poly<K>& g) {
    Poly<K> q(f.ring());
    if (!try_exact_divide(f, g, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

/// Rational content: positive rational c such that f / c has coprime integer
/// coefficients.
inline Rational rational_content(const QPoly& f) {
    if (f.is_zero()) return Rational(1);
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

/// Content 1, and a fixed sign convention: the coefficient of the lex-leading
/// term (with the last ring variable most significant) is positive.
inline QPoly normalize_primitive(const QPoly& f) {
    if (f.is_zero()) return f;
    Rational c = rational_content(f);
    const Monomial* lead = nullptr;
    for (const auto& [m, coeff] : f.terms()) {
        if (!lead) {
            lead = &m;
            continue;
        }
        for (std::size_t i = m.e.size(); i-- > 0;) {
            if (m.e[i] != lead->e[i]) {
                if (m.e[i] > lead->e[i]) lead = &m;
                break;
            }
        }
    }
    if (sign(f.coefficient(*lead)) < 0) c = -c;
    return f / c;
}

/// Fraction-free (Bareiss) determinant over a polynomial ring.
template <class K>
Poly<K> poly_matrix_determinant(std::vector<std::vector<Poly<K>>> m, const RingPtr& ring) {
    const std::size_t n = m.size();
    if (n == 0) return Poly<K>::constant(ring, K(1));
    Poly<K> prev = Poly<K>::constant(ring, K(1));
    int sign_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Poly<K>::zero(ring);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = Poly<K>::zero(ring);
        }
        prev = m[k][k];
    }
    Poly<K> det = m[n - 1][n - 1];
    return sign_flip < 0 ? -det : det;
}

/// Conversions between a polynomial that involves only `var` and the dense
/// univariate form.
template <class K>
UniPoly<K> to_univariate(const Poly<K>& f, std::size_t var) {
    UniPoly<K> u(static_cast<std::size_t>(std::max<long>(f.degree_in(var), -1) + 1), K(0));
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (i != var && m.e[i] != 0)
                throw std::domain_error("polynomial is not univariate in the requested variable");
        u[m.e[var]] = c;
    }
    uni_trim(u);
    return u;
}

template <class K>
Poly<K> from_univariate(const UniPoly<K>& u, const RingPtr& ring, std::size_t var) {
    Poly<K> p(ring);
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == K(0)) continue;
        Monomial m(ring->size());
        m.e[var] = static_cast<uint32_t>(i);
        p.add_term(m, u[i]);
    }
    return p;
}

template <class K>
bool is_univariate_in(const Poly<K>& f, std::size_t var) {
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (i != var && m.e[i] != 0) return false;
    return true;
}

}  // namespace curveh1
