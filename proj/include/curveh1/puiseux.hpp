#pragma once

#include "curveh1/numberfield.hpp"
#include "curveh1/poly.hpp"

namespace curveh1 {

/// Number of local analytic branches at the origin of a reduced bivariate
/// germ, by the recursive Newton-polygon algorithm. Edge polynomials are
/// factored over the running coefficient field; a root class of multiplicity
/// one contributes one branch per conjugate, higher multiplicities recurse
/// through the associated toric substitution. Needing a second field
/// extension raises "unsupported singularity field".
long branches_at_origin(const Poly<NFE>& f, const NumberFieldPtr& field);

}  // namespace curveh1
