#pragma once

#include "akzeta/ball.hpp"
#include "akzeta/index.hpp"

namespace akzeta {

// Multiple zeta value of an admissible index (1 on the empty index):
//   zeta(k) = sum_{0<m_1<...<m_r} 1/(m_1^{k_1} ... m_r^{k_r}).
// Evaluated by splitting the iterated-integral representation at 1/2,
// turning one slow sum at z = 1 into a convolution of geometrically
// convergent series at z = 1/2. The route is guarded by mzv_route_check.
RealBall mzv(const Index& k, mpfr_prec_t prec);

// Multiple t-value: with parities m_i == i (mod 2),
//   T(k) = 2^{r-1} sum_{0<m_1<...<m_r} 1/(m_1^{k_1} ... m_r^{k_r}).
// Same split, taken at sqrt(2)-1, the fixed point of z -> (1-z)/(1+z);
// that involution exchanges the two level-2 integrand forms, so the
// reflected half becomes another fast series at the same point.
RealBall mtv(const Index& k, mpfr_prec_t prec);

// Interpolated zeta with one trailing integer argument:
//   zeta(k; m) = zeta(k_1,...,k_r, m), m >= 2 (k may be empty).
RealBall ez_zeta_int(const Index& k, int m, mpfr_prec_t prec);
// Level-2 counterpart T(k; m) = T(k_1,...,k_r, m).
RealBall t_fn_int(const Index& k, int m, mpfr_prec_t prec);

// xi(k; m) at integer m >= 1: the binomial expansion of the integral
// representation into shifted zeta values at the dual of k_+,
//   xi(k; m) = sum_{|e| = m-1} b(d; e) zeta(d + e),   d = dual(k_+),
// with e running over nonnegative vectors of d's depth and b the product
// of shifted binomial coefficients.
RealBall xi_int(const Index& k, int m, mpfr_prec_t prec);
// Level-2 counterpart: same expansion with T-values.
RealBall psi_int(const Index& k, int m, mpfr_prec_t prec);

// One-time route guards: evaluate every admissible index of weight <=
// max_weight through the split and require the result to land inside the
// direct-sum oracle's interval. On failure the corresponding evaluator
// permanently switches to direct summation (far less precise, but
// independent of the suspect route) and this returns false. The first
// call's verdict is remembered for the process.
bool mzv_route_check(long max_weight = 5);
bool mtv_route_check(long max_weight = 5);

}  // namespace akzeta
