#pragma once

#include <vector>

#include "akzeta/ball.hpp"
#include "akzeta/index.hpp"

namespace akzeta {

// Direct evaluation of the nested power series
//   Li(k; z) = sum_{0<m_1<...<m_r} z^{m_r} / (m_1^{k_1} ... m_r^{k_r})
// and its level-2 counterpart
//   A(k; z)  = 2^r sum_{..., m_i == i mod 2} z^{m_r} / (...)
// for exact rational z in (0,1). Truncation is bounded rigorously by
//   sum_{m>M} z^m (1+ln m)^{r-1} / ((r-1)! m^{k_r})
//     <= f(M+1) z^{M+1} / (1-z),   f(m) = (1+ln m)^{r-1} / ((r-1)! m^{k_r}),
// valid once f is decreasing past M; the bound lands in the radius.

struct SeriesOptions {
  long max_terms = 200000;
  // Absolute truncation target. 0 derives one from the requested precision
  // and enforces the radius contract; a positive value is taken literally
  // and the contract check is skipped (used by the limit checks, which run
  // close to z = 1 on purpose).
  double abs_tail_target = 0;
};

RealBall li_eval(const Index& k, const Rational& z, mpfr_prec_t p);
RealBall li_eval_opt(const Index& k, const Rational& z, mpfr_prec_t p,
                     const SeriesOptions& opt);
RealBall a_eval(const Index& k, const Rational& z, mpfr_prec_t p);
RealBall a_eval_opt(const Index& k, const Rational& z, mpfr_prec_t p,
                    const SeriesOptions& opt);

// Ball-argument variants: the argument's own radius propagates into the
// result, so irrational evaluation points stay rigorous.
RealBall li_eval(const Index& k, const RealBall& z, mpfr_prec_t p,
                 const SeriesOptions& opt = {});
RealBall a_eval(const Index& k, const RealBall& z, mpfr_prec_t p,
                const SeriesOptions& opt = {});

// Li(l, {1}^a; z) for a = 0..a_max in one pass, sharing the inner levels.
std::vector<RealBall> li_eval_family(const Index& l, int a_max,
                                     const Rational& z, mpfr_prec_t p,
                                     const SeriesOptions& opt);

// Closed forms: Li({1}^d; z) = (-log(1-z))^d / d! and the level-2
// counterpart A({1}^d; (1-z)/(1+z)) = (-log z)^d / d!.
RealBall li_ones(int d, const Rational& z, mpfr_prec_t p);
RealBall a_ones_frac(int d, const Rational& z, mpfr_prec_t p);

}  // namespace akzeta
