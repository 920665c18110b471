#pragma once

#include <set>
#include <vector>

#include "curveh1/oracle.hpp"

namespace curveh1 {

/// Numerical semigroup of a one-branch monomial germ.
struct SemigroupData {
    std::vector<long> generators;  // positive, gcd 1
    std::set<long> gaps;
    long conductor = 0;  // max(gaps) + 1, or 0 when there are no gaps

    bool contains(long n) const { return n >= 0 && (n >= conductor || !gaps.count(n)); }
    long delta() const { return static_cast<long>(gaps.size()); }
};

/// Gaps and conductor by dynamic programming; gcd must be 1.
SemigroupData semigroup_data(std::vector<long> generators);

/// Toric relation ideal of the monomial curve t -> (t^a1, ..., t^ak),
/// computed by eliminating t; the presentation is weighted-homogeneous with
/// the generators as weights and feeds the germ oracle.
AlgebraPresentation monomial_curve_presentation(const std::vector<long>& generators);

}  // namespace curveh1
