#include "curveh1/family.hpp"

#include <algorithm>
#include <random>

#include "curveh1/factor.hpp"
#include "curveh1/polyops.hpp"

namespace curveh1 {

namespace {

QPoly section6_cusp_germ(RingPtr& ring_out) {
    auto ring = make_ring({"w1", "w2"});
    QPoly w1 = QPoly::variable(ring, 0), w2 = QPoly::variable(ring, 1);
    ring_out = ring;
    return w1.pow(3) - w2.pow(2);
}

void check_plane(const FamilySpec& fam) {
    if (fam.kind != FamilySpec::Kind::Plane)
        throw std::domain_error("operation requires a plane family");
    if (fam.f.is_zero() || fam.f.is_constant())
        throw std::domain_error("family map must be nonconstant");
}

}  // namespace

FamilySpec section6_family() {
    // coordinate ring of Spec Q[x, xy, y^2, y^3]: relations among
    // (u, v, w1, w2) = (x, xy, y^2, y^3)
    auto ring = make_ring({"u", "v", "w1", "w2"});
    FamilySpec fam;
    fam.kind = FamilySpec::Kind::Section6;
    fam.f = QPoly::variable(ring, 0);  // the map (u, v, w1, w2) -> u
    fam.weights = {1, 1, 1, 1};
    return fam;
}

SpecialValues special_values(const FamilySpec& fam) {
    if (fam.kind == FamilySpec::Kind::Section6) return {{Rational(0)}, {}};
    check_plane(fam);

    const RingPtr& ring = fam.f.ring();
    auto big = make_ring({(*ring)[0], (*ring)[1], "t"});
    QPoly f3 = fam.f.in_ring(big);
    QPoly t = QPoly::variable(big, 2);
    Ideal<Rational> crit(big, {f3 - t, f3.derivative(0), f3.derivative(1)});
    auto elim = eliminate(crit, {2});

    SpecialValues out;
    if (elim.empty()) throw std::domain_error("degenerate family");
    // the elimination ideal in Q[t] is principal; take the minimal element
    QPoly gen = elim.front();
    for (const auto& e : elim)
        if (e.degree() < gen.degree()) gen = e;
    if (gen.is_constant()) return out;  // no critical values

    for (auto& [phi, mult] : factor_univariate(gen, 2)) {
        if (phi.degree() == 1) {
            Rational root = -phi.constant_coefficient() /
                            phi.coefficient_in(2, 1).constant_coefficient();
            out.rational_values.push_back(root);
        } else {
            auto tring = make_ring({"t"});
            out.irrational_factors.push_back(phi.in_ring(tring));
        }
    }
    std::sort(out.rational_values.begin(), out.rational_values.end());
    return out;
}

FiberRecord fiber_h1(const FamilySpec& fam, const Rational& y) {
    FiberRecord rec;
    rec.y = y;

    if (fam.kind == FamilySpec::Kind::Section6) {
        if (y == 0) {
            RingPtr germ_ring;
            QPoly germ = section6_cusp_germ(germ_ring);
            auto pres = make_presentation(germ_ring, {germ}, {2, 3});
            long bound = std::max<long>(24, graded_certificate_bound(pres));
            // the reduced fiber is a cusp: b1 = 0 plus the germ's local Betti
            // number; f^-1(0) meets Sing(f) only at the origin
            rec.h1 = truncated_mu_prime(pres, bound).value;
        } else {
            rec.h1 = 0;  // fiber isomorphic to a line
        }
        return rec;
    }

    check_plane(fam);
    QPoly g = fam.f - QPoly::constant(fam.f.ring(), y);

    rec.reduced = normalize_primitive(g) == squarefree_part(g);

    // finiteness of fiber ∩ Sing(f)
    auto gb = groebner_basis(
        Ideal<Rational>(fam.f.ring(), {g, fam.f.derivative(0), fam.f.derivative(1)}),
        MonomialOrder::grevlex());
    rec.finite_singular = gb.is_unit_ideal() || quotient_dimension(gb).finite;

    if (!rec.reduced) return rec;  // skipped (non-reduced)

    std::vector<QPoly> factors;
    auto hint = fam.fiber_hints.find(y);
    if (hint != fam.fiber_hints.end()) {
        factors = hint->second;
        for (auto& h : factors) h = h.in_ring(fam.f.ring());
        QPoly prod = QPoly::constant(fam.f.ring(), 1);
        for (const auto& h : factors) prod *= h;
        if (normalize_primitive(prod) != normalize_primitive(g))
            throw std::domain_error("fiber factor hint does not multiply to the fiber");
    } else {
        factors = {g};
    }
    rec.h1 = h1_dimension(make_curve_spec(std::move(factors)), false).h1_formula;
    return rec;
}

long generic_h1(const FamilySpec& fam, long seed) {
    if (fam.kind == FamilySpec::Kind::Section6) return 0;  // lines away from 0
    check_plane(fam);
    auto special = special_values(fam);

    std::mt19937_64 rng(static_cast<uint64_t>(seed));
    std::vector<Rational> samples;
    while (samples.size() < 3) {
        long c = static_cast<long>(rng() % 41) - 20;
        Rational y(c);
        bool bad = std::find(samples.begin(), samples.end(), y) != samples.end() ||
                   std::find(special.rational_values.begin(), special.rational_values.end(),
                             y) != special.rational_values.end();
        if (!bad) samples.push_back(y);
    }
    std::optional<long> value;
    for (const auto& y : samples) {
        FiberRecord rec = fiber_h1(fam, y);
        if (!rec.h1) throw std::logic_error("generic fiber not reduced");
        if (value && *value != *rec.h1) throw std::domain_error("generic sampling inconsistent");
        value = *rec.h1;
    }
    return *value;
}

FamilyReport family_scan(const FamilySpec& fam, long seed) {
    FamilyReport rep;
    rep.lci = fam.lci();
    rep.special = special_values(fam);
    rep.h_f = generic_h1(fam, seed);

    for (const auto& y : rep.special.rational_values) {
        FiberRecord rec = fiber_h1(fam, y);
        if (rec.h1) {
            SemiVerdict v;
            v.y = y;
            v.holds = *rec.h1 <= rep.h_f;
            if (!v.holds && rep.lci && rec.finite_singular)
                throw std::logic_error("semicontinuity violated on an lci family");
            rep.semicontinuity.push_back(v);
        }
        rep.fibers.push_back(std::move(rec));
    }

    if (fam.kind == FamilySpec::Kind::Plane) {
        std::mt19937_64 rng(static_cast<uint64_t>(seed));
        std::vector<Rational> samples;
        while (samples.size() < 3) {
            long c = static_cast<long>(rng() % 41) - 20;
            Rational y(c);
            bool bad = std::find(samples.begin(), samples.end(), y) != samples.end() ||
                       std::find(rep.special.rational_values.begin(),
                                 rep.special.rational_values.end(),
                                 y) != rep.special.rational_values.end();
            if (!bad) samples.push_back(y);
        }
        for (const auto& y : samples) {
            FiberRecord rec = fiber_h1(fam, y);
            rec.generic_sample = true;
            rep.fibers.push_back(std::move(rec));
        }
    } else {
        FiberRecord rec = fiber_h1(fam, Rational(1));
        rec.generic_sample = true;
        rep.fibers.push_back(std::move(rec));
    }

    // tame families: the fiber dimension is constant across all fibers
    if (fam.tame_tag) {
        for (const auto& rec : rep.fibers)
            if (rec.h1 && *rec.h1 != rep.h_f)
                throw std::logic_error("tame family with non-constant fiber cohomology");
    }
    return rep;
}

}  // namespace curveh1
