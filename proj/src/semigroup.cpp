#include "curveh1/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace curveh1 {

SemigroupData semigroup_data(std::vector<long> generators) {
    if (generators.empty()) throw std::domain_error("not a numerical semigroup of a branch");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    long g = 0;
    for (long a : generators) {
        if (a <= 0) throw std::domain_error("not a numerical semigroup of a branch");
        g = std::gcd(g, a);
    }
    if (g != 1) throw std::domain_error("not a numerical semigroup of a branch");

    SemigroupData data;
    data.generators = generators;
    // everything beyond a1 * ak is reachable
    const long bound = generators.front() * generators.back() + 1;
    std::vector<bool> reach(bound + 1, false);
    reach[0] = true;
    for (long v = 1; v <= bound; ++v)
        for (long a : generators)
            if (v >= a && reach[v - a]) {
                reach[v] = true;
                break;
            }
    long last_gap = -1;
    for (long v = 1; v <= bound; ++v)
        if (!reach[v]) {
            data.gaps.insert(v);
            last_gap = v;
        }
    data.conductor = last_gap + 1;
    return data;
}

AlgebraPresentation monomial_curve_presentation(const std::vector<long>& generators) {
    SemigroupData check = semigroup_data(generators);  // validates gcd = 1
    const std::size_t k = check.generators.size();

    std::vector<std::string> names;
    names.push_back("t");
    for (std::size_t i = 0; i < k; ++i) names.push_back("u" + std::to_string(i + 1));
    auto big = make_ring(names);

    std::vector<QPoly> gens;
    QPoly t = QPoly::variable(big, 0);
    for (std::size_t i = 0; i < k; ++i)
        gens.push_back(QPoly::variable(big, i + 1) -
                       t.pow(static_cast<unsigned>(check.generators[i])));
    std::vector<std::size_t> keep;
    for (std::size_t i = 1; i <= k; ++i) keep.push_back(i);
    auto toric = eliminate(Ideal<Rational>(big, std::move(gens)), keep);

    std::vector<std::string> small_names(names.begin() + 1, names.end());
    auto ring = make_ring(small_names);
    std::vector<int> weights;
    for (long a : check.generators) weights.push_back(static_cast<int>(a));

    // the lex elimination basis is rarely minimal; keep only generators not
    // implied by lower-degree ones
    std::vector<QPoly> candidates;
    for (auto& r : toric) candidates.push_back(r.in_ring(ring));
    std::sort(candidates.begin(), candidates.end(), [&](const QPoly& a, const QPoly& b) {
        return a.weighted_degree(weights) < b.weighted_degree(weights);
    });
    std::vector<QPoly> relations;
    for (auto& c : candidates) {
        if (!relations.empty()) {
            auto gb = groebner_basis(Ideal<Rational>(ring, relations),
                                     MonomialOrder::wgrevlex(weights));
            if (normal_form(c, gb).is_zero()) continue;
        }
        relations.push_back(c);
    }
    return make_presentation(ring, std::move(relations), std::move(weights));
}

}  // namespace curveh1
