#pragma once

#include <vector>

#include "curveh1/polyops.hpp"

namespace curveh1 {

/// Sylvester resultant with respect to one variable. Coefficient rows are
/// laid out in ascending degree, which fixes the sign convention:
/// res(y^2 - x^3, 2y, y) = 4x^3.
template <class K>
Poly<K> sylvester_resultant(const Poly<K>& f, const Poly<K>& g, std::size_t var) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    const RingPtr& ring = f.ring();
    const long df = f.degree_in(var), dg = g.degree_in(var);
    if (df <= 0 && dg <= 0)
        throw std::domain_error("resultant variable occurs in neither polynomial");
    if (df <= 0) return f.pow(static_cast<unsigned>(dg));
    if (dg <= 0) return g.pow(static_cast<unsigned>(df));

    auto fc = f.coefficients_in(var);
    auto gc = g.coefficients_in(var);
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Poly<K>>> m(n, std::vector<Poly<K>>(n, Poly<K>::zero(ring)));
    for (long r = 0; r < dg; ++r)
        for (long k = 0; k <= df; ++k) m[r][r + k] = fc[k];
    for (long r = 0; r < df; ++r)
        for (long k = 0; k <= dg; ++k) m[dg + r][r + k] = gc[k];
    return poly_matrix_determinant(std::move(m), ring);
}

struct ResultantResult {
    QPoly value;
    /// Set when both leading coefficients (as polynomials in the eliminated
    /// variable) can vanish simultaneously, in which case the vanishing locus
    /// of the resultant may exceed the projection of the common zero set.
    bool lc_caveat = false;
};

QPoly multivariate_gcd(const QPoly& a, const QPoly& b);

inline ResultantResult resultant(const QPoly& f, const QPoly& g, std::size_t var) {
    ResultantResult out;
    out.value = sylvester_resultant(f, g, var);

    const long df = f.degree_in(var), dg = g.degree_in(var);
    if (df > 0 && dg > 0) {
        QPoly lf = f.coefficient_in(var, static_cast<uint32_t>(df));
        QPoly lg = g.coefficient_in(var, static_cast<uint32_t>(dg));
        if (lf.is_constant() || lg.is_constant()) {
            out.lc_caveat = false;
        } else {
            std::size_t live = 0;
            for (std::size_t i = 0; i < f.ring()->size(); ++i)
                if (i != var && (lf.involves(i) || lg.involves(i))) ++live;
            if (live <= 1) {
                out.lc_caveat = !multivariate_gcd(lf, lg).is_constant();
            } else {
                out.lc_caveat = true;  // cannot certify disjointness cheaply
            }
        }
    }
    return out;
}

}  // namespace curveh1
