#pragma once

#include <optional>
#include <string>

#include "curveh1/oracle.hpp"
#include "curveh1/semigroup.hpp"
#include "curveh1/topology.hpp"

namespace curveh1 {

enum class Verdict { Agree, Disagree, OracleUnstable };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Agree: return "agree";
        case Verdict::Disagree: return "disagree";
        case Verdict::OracleUnstable: return "oracle-unstable";
    }
    return "agree";
}

/// Both sides of the dimension identity for one curve: the topological and
/// local side b1 + sum of mu', and optionally the independent truncated
/// cohomology value.
struct H1Report {
    TopologyReport topology;
    std::vector<SingularityRecord> singularities;
    long sum_mu_prime = 0;
    long h1_formula = 0;  // b1 + sum_mu_prime
    std::optional<OracleResult> h1_oracle;
    std::optional<Verdict> verdict;  // present when the oracle ran
};

/// Assembles the identity for a plane curve; mu' := mu holds because plane
/// germs are local complete intersections. With the oracle enabled, the
/// verdict compares both sides.
H1Report h1_dimension(const CurveSpec& spec, bool with_oracle, long degree_bound = 24);

/// The identity for a monomial curve t -> (t^a1, ..., t^ak): the curve is
/// contractible (b1 = 0) with one singular germ at the origin, whose mu' is
/// computed by the germ oracle. For k > 2 the germ is not a plane curve, so
/// mu' comes from the oracle rather than the lci identification;
/// mu is the curve-germ Milnor number 2*delta - r + 1.
H1Report monomial_h1(const std::vector<long>& generators, bool with_oracle,
                     long degree_bound = 24);

/// True iff h1 = 0; cross-checked structurally (every component rational,
/// smooth, one place at infinity, no finite intersections).
bool is_disjoint_lines(const CurveSpec& spec);

}  // namespace curveh1
