#pragma once

#include <vector>

#include "lpdo/ratfunc.hpp"
#include "lpdo/unipoly.hpp"

namespace lpdo {

/// Distinct rational roots of a nonzero univariate polynomial over Q.
std::vector<Rational> rational_roots(const UniPoly<Rational>& u);

/// Distinct roots in Q(x,y) of a nonzero univariate polynomial with RatFunc
/// coefficients. Roots are found by specializing the parameters at a good
/// point, solving there, Newton-lifting the solutions as truncated power
/// series, and reconstructing numerator/denominator by Pade approximation;
/// every candidate is verified by exact evaluation, so no wrong roots are
/// returned. Output is deterministically ordered.
std::vector<RatFunc> rational_function_roots(const UniPoly<RatFunc>& u);

}  // namespace lpdo
