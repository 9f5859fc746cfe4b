#pragma once

#include <vector>

#include "akzeta/ball.hpp"
#include "akzeta/index.hpp"
#include "akzeta/rational.hpp"

namespace akzeta {

enum class DerivKind { LI, A };

// Central-difference test of the derivative recurrences
//   d/dz Li(k;z) = Li(k_1..k_{r-1}, k_r - 1; z) / z     (k_r >= 2)
//                = Li(k_1..k_{r-1}; z) / (1 - z)        (k_r = 1)
// and, for the parity-constrained family,
//   d/dz A(k;z)  = A(k_1..k_{r-1}, k_r - 1; z) / z      (k_r >= 2)
//                = 2 A(k_1..k_{r-1}; z) / (1 - z^2)     (k_r = 1).
// The step 2^-37 is dyadic so the shifted arguments stay exact rationals;
// the discretization error |f'''| h^2 / 6 sits orders of magnitude below
// tol at the weights this runs at, and the evaluation radii are accounted
// for by the ball comparison.
bool derivative_check(DerivKind kind, const Index& k, const Rational& z,
                      mpfr_prec_t prec, double tol = 1e-15);

// Walks the combination
//   Li(l,{1}^a;z) - sum_{d=1}^{a} (-1)^{a-d} c_{a-d} Li({1}^d;z),
//   c_w = sum over e >= 0 of weight w, depth dep(l^dagger), of
//         b(l^dagger;e) zeta(l^dagger+e),
// along z = 1 - 10^-j for j = 2..6 and requires its deviation from the
// limit (-1)^a c_a to shrink at every step and end below tol. Convergence
// is only logarithmic in 1-z, hence the loose default tolerance. Deviations
// are reported through devs when given.
bool limit_lemma_check(const Index& l, int a, mpfr_prec_t prec,
                       double tol = 1e-3,
                       std::vector<double>* devs = nullptr);

}  // namespace akzeta
