#include "curveh1/derham.hpp"

namespace curveh1 {

H1Report h1_dimension(const CurveSpec& spec, bool with_oracle, long degree_bound) {
    H1Report rep;
    rep.topology = betti_numbers(spec);
    rep.singularities = singularity_census(spec.product);
    for (const auto& rec : rep.singularities)
        rep.sum_mu_prime += rec.point.orbit_size() * rec.mu_prime;
    rep.h1_formula = rep.topology.b1 + rep.sum_mu_prime;

    if (with_oracle) {
        auto pres = make_presentation(spec.ring, {spec.product}, spec.weights);
        long bound = degree_bound;
        if (pres.graded) bound = std::max(bound, graded_certificate_bound(pres));
        rep.h1_oracle = truncated_h1(pres, bound);
        if (!rep.h1_oracle->stabilized)
            rep.verdict = Verdict::OracleUnstable;
        else
            rep.verdict =
                rep.h1_oracle->value == rep.h1_formula ? Verdict::Agree : Verdict::Disagree;
    }
    return rep;
}

H1Report monomial_h1(const std::vector<long>& generators, bool with_oracle, long degree_bound) {
    auto semigroup = semigroup_data(generators);
    auto pres = monomial_curve_presentation(generators);
    long bound = std::max(degree_bound, graded_certificate_bound(pres));

    H1Report rep;
    rep.topology.b0 = 1;  // image of the line t -> (t^a1, ..., t^ak)
    rep.topology.b1 = 0;
    rep.topology.chi = 1;
    ComponentData cd;
    cd.degree = semigroup.generators.back();
    cd.genus = 0;
    cd.punctures = 1;
    rep.topology.components.push_back(cd);

    SingularityRecord origin;
    origin.point = rational_point(Rational(0), Rational(0));
    origin.branches = 1;
    origin.delta = semigroup.delta();
    origin.mu = 2 * origin.delta;  // curve-germ Milnor number, r = 1
    origin.mu_prime = truncated_mu_prime(pres, bound).value;
    if (origin.delta > 0) rep.singularities.push_back(origin);

    rep.sum_mu_prime = origin.delta > 0 ? origin.mu_prime : 0;
    rep.h1_formula = rep.topology.b1 + rep.sum_mu_prime;

    if (with_oracle) {
        rep.h1_oracle = truncated_h1(pres, bound);
        if (!rep.h1_oracle->stabilized)
            rep.verdict = Verdict::OracleUnstable;
        else
            rep.verdict =
                rep.h1_oracle->value == rep.h1_formula ? Verdict::Agree : Verdict::Disagree;
    }
    return rep;
}

bool is_disjoint_lines(const CurveSpec& spec) {
    H1Report rep = h1_dimension(spec, false);
    bool by_formula = rep.h1_formula == 0;

    bool structural = rep.singularities.empty() && rep.topology.incidence.empty();
    for (std::size_t i = 0; i < spec.factors.size() && structural; ++i) {
        if (rep.topology.components[i].genus != 0) structural = false;
        if (rep.topology.components[i].punctures != 1) structural = false;
    }
    if (structural != by_formula)
        throw std::logic_error("disjoint-lines criterion mismatch");
    return by_formula;
}

}  // namespace curveh1
