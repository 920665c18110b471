#include "curveh1/singular.hpp"

#include <algorithm>

#include "curveh1/factor.hpp"
#include "curveh1/polyops.hpp"

namespace curveh1 {

namespace {

/// Orders orbits deterministically: rational points first by coordinates,
/// then extension orbits by minimal polynomial and representative.
bool point_less(const AlgebraicPoint& a, const AlgebraicPoint& b) {
    if (a.orbit_size() != b.orbit_size()) return a.orbit_size() < b.orbit_size();
    return a.to_string() < b.to_string();
}

UniPoly<NFE> fiber_gcd(const std::vector<QPoly>& basis, const NFE& x0,
                       const NumberFieldPtr& field) {
    UniPoly<NFE> g;
    for (const auto& b : basis) {
        Poly<NFE> be = embed_nfe(b);
        Poly<NFE> at = be.substitute(0, Poly<NFE>::constant(be.ring(), x0));
        UniPoly<NFE> u = to_univariate(at, 1);
        if (uni_is_zero(u)) continue;
        g = g.empty() ? uni_monic(u) : uni_gcd(g, u);
        if (uni_degree(g) == 0) break;
    }
    (void)field;
    return g;
}

}  // namespace

Poly<NFE> germ_at(const QPoly& f, const AlgebraicPoint& p) {
    Poly<NFE> g = embed_nfe(f);
    g = g.shift(0, p.x);
    g = g.shift(1, p.y);
    return g;
}

std::vector<AlgebraicPoint> singular_points(const QPoly& f) {
    if (f.ring()->size() != 2) throw std::domain_error("singular_points expects a plane curve");
    if (normalize_primitive(f) != squarefree_part(f)) throw std::domain_error("curve not reduced");

    const RingPtr& ring = f.ring();
    Ideal<Rational> jac(ring, {f, f.derivative(0), f.derivative(1)});
    auto gb = groebner_basis(jac, MonomialOrder::lex({1, 0}));  // y > x, eliminates y
    if (gb.is_unit_ideal()) return {};

    // eliminant: the unique basis element lying in Q[x]
    QPoly eliminant(ring);
    for (const auto& b : gb.basis)
        if (!b.is_zero() && !b.involves(1)) {
            eliminant = b;
            break;
        }
    if (eliminant.is_zero()) throw std::logic_error("singular locus not zero-dimensional");

    std::vector<AlgebraicPoint> points;
    for (const auto& [phi, mult] : factor_univariate(eliminant, 0)) {
        if (phi.degree() == 1) {
            // x - x0
            Rational x0 = -phi.constant_coefficient() / phi.coefficient_in(0, 1).constant_coefficient();
            UniPoly<NFE> g = fiber_gcd(gb.basis, NFE(x0), nullptr);
            if (uni_degree(g) < 1) throw std::logic_error("eliminant root with empty fiber");
            for (auto& [psi, pm] : factor_univariate_ext(g, nullptr)) {
                if (uni_degree(psi) == 1) {
                    points.push_back(rational_point(x0, (-psi[0]).rational_value()));
                } else {
                    UniPoly<Rational> mp;
                    mp.reserve(psi.size());
                    for (const auto& c : psi) mp.push_back(c.rational_value());
                    auto field = make_number_field(std::move(mp));
                    points.push_back({field, NFE(x0), NFE::generator(field)});
                }
            }
        } else {
            auto field = make_number_field(to_univariate(phi, 0));
            NFE alpha = NFE::generator(field);
            UniPoly<NFE> g = fiber_gcd(gb.basis, alpha, field);
            if (uni_degree(g) < 1) throw std::logic_error("eliminant root with empty fiber");
            for (auto& [psi, pm] : factor_univariate_ext(g, field)) {
                if (uni_degree(psi) != 1) throw std::domain_error("unsupported point field");
                points.push_back({field, alpha, -psi[0]});
            }
        }
    }
    std::sort(points.begin(), points.end(), point_less);
    return points;
}

long local_milnor(const QPoly& f, const AlgebraicPoint& p) {
    Poly<NFE> g = germ_at(f, p);
    if (!(g.constant_coefficient() == NFE(0)))
        throw std::domain_error("point is not on the curve");
    return mu_at_origin(g);
}

long total_milnor_on_curve(const QPoly& f) {
    if (normalize_primitive(f) != squarefree_part(f)) throw std::domain_error("curve not reduced");
    const RingPtr& ring = f.ring();
    QPoly fx = f.derivative(0), fy = f.derivative(1);
    auto jac_gb = groebner_basis(Ideal<Rational>(ring, {fx, fy}), MonomialOrder::grevlex());
    if (jac_gb.is_unit_ideal()) return 0;
    auto st = quotient_dimension(jac_gb);

    if (st.finite) {
        if (st.dimension == 0) return 0;
        // N = the global critical colength is a safe nilpotency bound
        const unsigned n = static_cast<unsigned>(st.dimension);
        auto gb = groebner_basis(Ideal<Rational>(ring, {fx, fy, f.pow(n)}),
                                 MonomialOrder::grevlex());
        auto st2 = quotient_dimension(gb);
        if (!st2.finite) throw std::logic_error("truncated critical algebra not finite");
        return st2.dimension;
    }

    // The critical locus is a curve; on a reduced curve it cannot meet f = 0
    // in more than finitely many points (an on-curve critical component
    // would be a repeated factor), so (f_x, f_y) + (f^N) is still artinian
    // and the colength stabilizes at the on-curve Milnor sum.
    long prev = -1;
    for (unsigned n = 1; n <= 48; ++n) {
        auto gb = groebner_basis(Ideal<Rational>(ring, {fx, fy, f.pow(n)}),
                                 MonomialOrder::grevlex());
        if (gb.is_unit_ideal()) return 0;
        auto st2 = quotient_dimension(gb);
        if (!st2.finite) throw std::domain_error("critical locus not finite");
        if (st2.dimension == prev && static_cast<long>(n) > st2.dimension) return st2.dimension;
        prev = st2.dimension;
    }
    throw std::domain_error("critical locus not finite");
}

long branch_count(const QPoly& f, const AlgebraicPoint& p) {
    Poly<NFE> g = germ_at(f, p);
    return branches_at_origin(g, p.field);
}

long delta_invariant(long mu, long r) {
    long s = mu - r + 1;
    if (s < 0 || (s % 2) != 0) throw std::domain_error("inconsistent singularity data");
    return (mu + r - 1) / 2;
}

std::vector<SingularityRecord> singularity_census(const QPoly& f) {
    std::vector<SingularityRecord> records;
    for (const auto& p : singular_points(f)) {
        SingularityRecord rec;
        rec.point = p;
        rec.mu = local_milnor(f, p);
        rec.branches = branch_count(f, p);
        rec.delta = delta_invariant(rec.mu, rec.branches);
        rec.mu_prime = rec.mu;  // plane-curve germ: local complete intersection
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace curveh1
