#pragma once

#include "akzeta/ball.hpp"
#include "akzeta/index.hpp"

namespace akzeta {

// Validation oracles: direct summation with rigorously bounded tails,
// kept deliberately independent of the production evaluation paths.
//
// For the z = 1 sums the truncation tail past N is enclosed by an envelope
// sandwich: each prefix level's partial-sum function F_i is bracketed for
// n >= N-2 between polynomials in v = ln(n / (N-2)) anchored at the exact
// ball F_i(N-2), built level by level through sum-integral comparisons
// (valid once the integrand's log-polynomial numerator passes a
// coefficient test that makes it decreasing). The final level integrates
// in closed form against e^{-(k_r - 1) v}, giving two-sided tail bounds of
// width O(polylog(N)/N^2) instead of the crude O(polylog(N)/N).
RealBall oracle_mzv(const Index& k, long terms = 100000);
RealBall oracle_mtv(const Index& k, long terms = 100000);

// Power-series oracles at moderate z: compensated double summation over
// explicit chains plus a geometric tail bound.
RealBall oracle_li(const Index& k, const Rational& z);
RealBall oracle_a(const Index& k, const Rational& z);

}  // namespace akzeta
