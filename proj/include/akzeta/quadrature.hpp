#pragma once

#include "akzeta/ball.hpp"
#include "akzeta/poset.hpp"
#include "akzeta/rational.hpp"

namespace akzeta {

// Independent low-precision check of i_z by direct numerical integration
// over the order polytope of x. The polytope splits into one simplex per
// linear extension, and each simplex integral is evaluated as a nested
// Gauss-Legendre quadrature with panel doubling until the estimate settles
// below target_error. The returned ball carries the observed convergence
// gap as its radius and is good for at least six digits at the default
// target. Throws poset_error when x has more than four elements or is not
// semi-admissible, eval_error for z outside (0, 0.9].
RealBall quadrature_oracle(const TwoPoset& x, const Rational& z,
                           double target_error = 1e-7);

}  // namespace akzeta
