#pragma once

#include <vector>

#include "curveh1/groebner.hpp"
#include "curveh1/point.hpp"
#include "curveh1/poly.hpp"
#include "curveh1/puiseux.hpp"

namespace curveh1 {

/// One singular point with its local invariants. mu' = mu is justified for
/// plane-curve germs, which are local complete intersections.
struct SingularityRecord {
    AlgebraicPoint point;
    long mu = 0;
    long branches = 1;
    long delta = 0;
    long mu_prime = 0;
};

inline Poly<NFE> embed_nfe(const QPoly& f) {
    return f.map_coefficients<NFE>(f.ring(), [](const Rational& c) { return NFE(c); });
}

/// Germ of f at p, translated to the origin (coefficients move into p's
/// field).
Poly<NFE> germ_at(const QPoly& f, const AlgebraicPoint& p);

/// All common zeros of (f, f_x, f_y) grouped into Galois orbits.
/// Errors: "curve not reduced" for non-squarefree input, "unsupported point
/// field" when a coordinate would need a second extension.
std::vector<AlgebraicPoint> singular_points(const QPoly& f);

/// Milnor number at the origin: stabilized colength of (f_x, f_y) + m^N.
template <class K>
long mu_at_origin(const Poly<K>& f, long budget = 48) {
    const RingPtr& ring = f.ring();
    Poly<K> fx = f.derivative(0), fy = f.derivative(1);
    long prev = -1;
    for (long n = 1; n <= budget; ++n) {
        std::vector<Poly<K>> gens{fx, fy};
        for (long a = 0; a <= n; ++a) {
            Monomial m(2);
            m.e[0] = static_cast<uint32_t>(a);
            m.e[1] = static_cast<uint32_t>(n - a);
            gens.push_back(Poly<K>::term(ring, m, K(1)));
        }
        auto gb = groebner_basis(Ideal<K>(ring, std::move(gens)), MonomialOrder::grevlex());
        auto st = quotient_dimension(gb);
        if (!st.finite) throw std::logic_error("truncated local algebra not finite");
        if (st.dimension == prev && n > st.dimension) return st.dimension;
        prev = st.dimension;
    }
    throw std::domain_error("non-isolated singularity");
}

/// Milnor number of the curve f at the point p.
long local_milnor(const QPoly& f, const AlgebraicPoint& p);

/// Sum of Milnor numbers over all complex singular points lying on the
/// curve, computed globally as the colength of (f_x, f_y) + (f^N) with
/// N the total critical colength.
long total_milnor_on_curve(const QPoly& f);

/// Local analytic branches of the curve at p (Newton-Puiseux).
long branch_count(const QPoly& f, const AlgebraicPoint& p);

/// delta = (mu + r - 1) / 2; rejects parity violations, which signal an
/// upstream bug.
long delta_invariant(long mu, long r);

/// Full census: every singular orbit with mu, r, delta and mu' = mu.
std::vector<SingularityRecord> singularity_census(const QPoly& f);

}  // namespace curveh1
