#pragma once

#include <utility>
#include <vector>

#include "curveh1/groebner.hpp"
#include "curveh1/poly.hpp"

namespace curveh1 {

/// Finitely presented algebra A = Q[x_1..x_n]/(relations), with positive
/// variable weights. `graded` holds when every relation is
/// weighted-homogeneous; the truncated computations are then exact per
/// degree and stabilization is certified.
struct AlgebraPresentation {
    RingPtr ring;
    std::vector<QPoly> relations;
    std::vector<int> weights;
    bool graded = true;
};

AlgebraPresentation make_presentation(RingPtr ring, std::vector<QPoly> relations,
                                      std::vector<int> weights = {});

/// Degreewise cokernel accounting for dim Omega^1(A)/dA.
struct OracleResult {
    long degree_bound = 0;
    std::vector<std::pair<long, long>> per_degree;  // (degree, increment)
    long value = 0;
    bool stabilized = false;
    long stabilization_window = 4;
    bool certified = false;  // graded vanishing bound reached (not serialized)

    bool operator==(const OracleResult& o) const {
        return degree_bound == o.degree_bound && per_degree == o.per_degree && value == o.value &&
               stabilized == o.stabilized && stabilization_window == o.stabilization_window;
    }
};

/// Degree beyond which a graded presentation's increments provably vanish.
long graded_certificate_bound(const AlgebraPresentation& pres);

/// dim Omega^1(A)/dA accumulated degree by degree up to the bound.
/// Errors: "not a curve presentation" when the quotient is not
/// one-dimensional.
OracleResult truncated_h1(const AlgebraPresentation& pres, long degree_bound);

/// Local Betti number of the germ at the origin: the same linear algebra
/// filtered by order at the origin (relations must vanish at 0).
OracleResult truncated_mu_prime(const AlgebraPresentation& pres, long degree_bound);

}  // namespace curveh1
