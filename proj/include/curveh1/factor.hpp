#pragma once

#include <vector>

#include "curveh1/numberfield.hpp"
#include "curveh1/polyops.hpp"

namespace curveh1 {

/// gcd in Q[x_1..x_n], normalized (integer-primitive, positive lead).
QPoly multivariate_gcd(const QPoly& a, const QPoly& b);

/// f divided by gcd(f, all partial derivatives), normalized with content 1
/// and positive leading coefficient.
QPoly squarefree_part(const QPoly& f);

inline bool is_squarefree(const QPoly& f) {
    return squarefree_part(f).term_count() == normalize_primitive(f).term_count() &&
           squarefree_part(f) == normalize_primitive(f);
}

template <class P>
struct FactorOf {
    P factor;
    int multiplicity;
};

/// Irreducible monic factors over Q with multiplicities; product equals the
/// input up to a rational constant. Zassenhaus: squarefree decomposition,
/// Berlekamp mod a good prime, Hensel lifting, subset recombination.
/// Input degree is capped at 32.
std::vector<FactorOf<UniPoly<Rational>>> factor_univariate(const UniPoly<Rational>& f);

/// Wrapper for polynomials stored multivariately but involving one variable.
std::vector<FactorOf<QPoly>> factor_univariate(const QPoly& f, std::size_t var);

/// Squarefree decomposition over Q(alpha) (Yun), monic parts.
std::vector<FactorOf<UniPoly<NFE>>> squarefree_decomposition_ext(const UniPoly<NFE>& f);

/// Irreducible monic factors over a single extension Q(alpha), by Trager's
/// norm-and-factor. `field` may be null, meaning plain Q.
std::vector<FactorOf<UniPoly<NFE>>> factor_univariate_ext(const UniPoly<NFE>& f,
                                                          const NumberFieldPtr& field);

}  // namespace curveh1
