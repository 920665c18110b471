#include "curveh1/topology.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "curveh1/factor.hpp"
#include "curveh1/polyops.hpp"

namespace curveh1 {

namespace {

/// Chart polynomial of the projective closure of g.
/// Chart X=1: variables (y, z); chart Y=1: variables (x, z). In both cases
/// the second variable is the line at infinity z = 0.
QPoly chart_at_infinity(const QPoly& g, bool chart_y, const RingPtr& chart_ring) {
    const long d = g.degree();
    QPoly out(chart_ring);
    for (const auto& [m, c] : g.terms()) {
        long i = m.e[0], j = m.e[1];
        Monomial mm(2);
        mm.e[0] = static_cast<uint32_t>(chart_y ? i : j);
        mm.e[1] = static_cast<uint32_t>(d - i - j);
        out.add_term(mm, c);
    }
    return out;
}

struct InfinityKey {
    bool at_y_axis;
    std::string root_key;  // rational value or minimal polynomial
    bool operator<(const InfinityKey& o) const {
        if (at_y_axis != o.at_y_axis) return at_y_axis < o.at_y_axis;
        return root_key < o.root_key;
    }
};

struct GermSite {
    bool at_y_axis;
    NumberFieldPtr field;
    NFE c;
    long orbit_size;
};

/// Points at infinity of a single factor, with no branch data yet.
std::vector<GermSite> infinity_sites(const QPoly& g) {
    std::vector<GermSite> sites;
    const long d = g.degree();
    QPoly degree_form(g.ring());
    for (const auto& [m, c] : g.terms())
        if (m.degree() == d) degree_form.add_term(m, c);

    // (0:1:0) present iff the degree form vanishes at (x, y) = (0, 1)
    if (degree_form.coefficient_in(1, static_cast<uint32_t>(d)).is_zero())
        sites.push_back({true, nullptr, NFE(0), 1});

    QPoly h = degree_form.substitute(0, QPoly::constant(g.ring(), 1));
    if (!h.is_constant()) {
        for (auto& [psi, mult] : factor_univariate(h, 1)) {
            if (psi.degree() == 1) {
                Rational c0 = -psi.constant_coefficient() /
                              psi.coefficient_in(1, 1).constant_coefficient();
                sites.push_back({false, nullptr, NFE(c0), 1});
            } else {
                auto field = make_number_field(to_univariate(psi, 1));
                sites.push_back({false, field, NFE::generator(field), field->degree()});
            }
        }
    }
    return sites;
}

InfinityKey key_of(const GermSite& s) {
    if (s.at_y_axis) return {true, ""};
    if (!s.field) return {false, rational_to_string(s.c.rational_value())};
    return {false, s.field->minpoly_string()};
}

/// Branches of one factor at one infinity site.
long branches_at_site(const QPoly& g, const GermSite& s, const RingPtr& chart_ring) {
    QPoly chart = chart_at_infinity(g, s.at_y_axis, chart_ring);
    Poly<NFE> germ = embed_nfe(chart);
    if (!s.at_y_axis) germ = germ.shift(0, s.c);
    return branches_at_origin(germ, s.field);
}

/// Orbit-weighted delta invariants at the infinity points of one factor.
long infinity_delta_sum(const QPoly& g, const RingPtr& chart_ring) {
    long total = 0;
    for (const auto& s : infinity_sites(g)) {
        QPoly chart = chart_at_infinity(g, s.at_y_axis, chart_ring);
        Poly<NFE> germ = embed_nfe(chart);
        if (!s.at_y_axis) germ = germ.shift(0, s.c);
        long mu = mu_at_origin(germ);
        if (mu == 0) continue;
        long r = branches_at_origin(germ, s.field);
        total += s.orbit_size * delta_invariant(mu, r);
    }
    return total;
}

}  // namespace

CurveSpec make_curve_spec(std::vector<QPoly> factors) {
    if (factors.empty()) throw std::domain_error("curve with no factors");
    CurveSpec spec;
    spec.ring = factors.front().ring();
    if (spec.ring->size() != 2) throw std::domain_error("curve spec expects two variables");
    for (auto& f : factors) {
        if (f.is_zero()) throw std::domain_error("zero factor");
        if (f.is_constant()) throw std::domain_error("constant factor");
        if (normalize_primitive(f) != squarefree_part(f))
            throw std::domain_error("curve not reduced");
        // a factor divisible by a variable is reducible unless it is that
        // variable; this catches the commonest false irreducibility claim
        for (std::size_t v = 0; v < 2; ++v) {
            bool divisible = true;
            for (const auto& [m, c] : f.terms()) divisible = divisible && m.e[v] > 0;
            if (divisible && f.degree() > 1)
                throw std::domain_error("component not absolutely irreducible");
        }
    }
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = i + 1; j < factors.size(); ++j)
            if (!multivariate_gcd(factors[i], factors[j]).is_constant())
                throw std::domain_error("curve not reduced");
    spec.product = QPoly::constant(spec.ring, 1);
    for (auto& f : factors) spec.product *= f;
    spec.factors = std::move(factors);
    return spec;
}

std::vector<InfinityPoint> projective_data(const CurveSpec& spec) {
    auto chart_ring = make_ring({"u", "v"});
    std::map<InfinityKey, InfinityPoint> merged;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        for (const auto& s : infinity_sites(spec.factors[i])) {
            long b = branches_at_site(spec.factors[i], s, chart_ring);
            auto key = key_of(s);
            auto it = merged.find(key);
            if (it == merged.end()) {
                InfinityPoint pt;
                pt.at_y_axis = s.at_y_axis;
                pt.field = s.field;
                pt.c = s.c;
                pt.orbit_size = s.orbit_size;
                pt.branch_counts[static_cast<int>(i)] = b;
                merged.emplace(key, std::move(pt));
            } else {
                it->second.branch_counts[static_cast<int>(i)] += b;
            }
        }
    }
    std::vector<InfinityPoint> out;
    for (auto& [k, pt] : merged) out.push_back(std::move(pt));
    return out;
}

long component_genus(const QPoly& factor) {
    const long d = factor.degree();
    long delta_sum = 0;
    for (const auto& rec : singularity_census(factor))
        delta_sum += rec.point.orbit_size() * rec.delta;
    auto chart_ring = make_ring({"u", "v"});
    delta_sum += infinity_delta_sum(factor, chart_ring);
    long g = (d - 1) * (d - 2) / 2 - delta_sum;
    if (g < 0) throw std::domain_error("component not absolutely irreducible");
    return g;
}

long euler_characteristic(const CurveSpec& spec) { return betti_numbers(spec).chi; }

TopologyReport betti_numbers(const CurveSpec& spec) {
    TopologyReport rep;
    rep.infinity = projective_data(spec);

    // normalizations of the components, punctured at infinity
    long chi_tilde = 0;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        ComponentData cd;
        cd.degree = spec.factors[i].degree();
        cd.genus = component_genus(spec.factors[i]);
        for (const auto& pt : rep.infinity) {
            auto it = pt.branch_counts.find(static_cast<int>(i));
            if (it != pt.branch_counts.end()) cd.punctures += pt.orbit_size * it->second;
        }
        if (cd.punctures < 1) throw std::logic_error("component with no place at infinity");
        chi_tilde += 2 - 2 * cd.genus - cd.punctures;
        rep.components.push_back(cd);
    }

    // finite gluing: each singular point of the product identifies its
    // branches to one point
    long correction = 0;
    std::vector<int> comp_class(spec.factors.size());
    std::iota(comp_class.begin(), comp_class.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (comp_class[a] != a) a = comp_class[a] = comp_class[comp_class[a]];
        return a;
    };

    for (const auto& p : singular_points(spec.product)) {
        IncidencePoint ip;
        ip.point = p;
        ip.total_branches = branch_count(spec.product, p);
        correction += p.orbit_size() * (ip.total_branches - 1);
        std::vector<NFE> coords{p.x, p.y};
        for (std::size_t i = 0; i < spec.factors.size(); ++i)
            if (embed_nfe(spec.factors[i]).eval(coords) == NFE(0))
                ip.components.push_back(static_cast<int>(i));
        for (std::size_t k = 1; k < ip.components.size(); ++k)
            comp_class[find(ip.components[k])] = find(ip.components[0]);
        rep.incidence.push_back(std::move(ip));
    }

    rep.chi = chi_tilde - correction;
    long b0 = 0;
    for (std::size_t i = 0; i < spec.factors.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++b0;
    rep.b0 = b0;
    rep.b1 = rep.b0 - rep.chi;
    if (rep.b1 < 0) throw std::domain_error("component not absolutely irreducible");
    return rep;
}

}  // namespace curveh1
