#include "akzeta/series.hpp"

#include <algorithm>
#include <cmath>

namespace akzeta {

namespace {

void require_unit_interval(const Rational& z, const char* who) {
  if (sgn(z) <= 0 || cmp(z, 1) >= 0)
    throw eval_error(std::string(who) + ": z must lie in (0,1)");
}

// f(m) = (1+ln m)^{r-1} / ((r-1)! m^{k_r}) is decreasing once
// 1 + ln m > (r-1)/k_r; every M we use sits past that point.
long min_terms(int r, int kr) {
  double thresh = std::exp(static_cast<double>(r - 1) / std::max(kr, 1));
  return std::max(64L, static_cast<long>(std::ceil(thresh)) + 1);
}

// Smallest M with ln f(M+1) + (M+1) ln z - ln(1-z) <= ln_target,
// double-precision heuristic; the rigorous bound is recomputed in ball
// arithmetic afterwards and goes into the radius.
long choose_terms(double z, int r, int kr, double ln_target, long cap,
                  const char* who) {
  double lnz = std::log(z);
  double ln1mz = std::log1p(-z);
  auto lnX = [&](double M) {
    double lm = std::log(M + 1);
    return (r - 1) * std::log(1 + lm) - std::lgamma(r) - kr * lm +
           (M + 1) * lnz - ln1mz;
  };
  long lo = min_terms(r, kr);
  if (lnX(static_cast<double>(lo)) <= ln_target) return std::min(lo, cap);
  long hi = lo;
  while (lnX(static_cast<double>(hi)) > ln_target) {
    hi *= 2;
    if (hi > 8 * cap) break;
  }
  while (hi - lo > lo / 16 + 1) {
    long mid = lo + (hi - lo) / 2;
    (lnX(static_cast<double>(mid)) > ln_target ? lo : hi) = mid;
  }
  if (hi > cap)
    throw eval_error(std::string(who) +
                     ": series budget exceeded (z too close to 1)");
  return hi;
}

// Rigorous upper bound of the truncation past M as a ball.
RealBall tail_bound(const RealBall& z, int r, int kr, long M) {
  const mpfr_prec_t tp = 64;
  RealBall z64 = z;
  z64.round_to(tp);
  RealBall mp1 = RealBall::exact(M + 1, tp);
  RealBall f = pow_ui(RealBall::exact(1, tp) + log(mp1),
                      static_cast<unsigned long>(r - 1));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r - 1));
  f /= RealBall::exact(fact, tp);
  f /= pow_ui(mp1, static_cast<unsigned long>(kr));
  f *= pow_ui(z64, static_cast<unsigned long>(M + 1));
  f /= RealBall::exact(1, tp) - z64;
  return f;
}

// One pass of the nested-series recurrence over m = 1..M at working
// precision w. ks holds the exponents k_1..k_R; with parity set, level i
// only accepts m == i (mod 2). Returns the z-weighted partial sums for
// levels collect_from..R (so out[a] covers the index cut after
// collect_from + a entries).
std::vector<RealBall> series_pass(const std::vector<int>& ks, bool parity,
                                  const RealBall& z, mpfr_prec_t w, long M,
                                  int collect_from) {
  const int R = static_cast<int>(ks.size());
  RealBall zb = z;
  if (zb.precision() > w) zb.round_to(w);
  std::vector<RealBall> ps(static_cast<size_t>(R) + 1, RealBall(w));
  ps[0] = RealBall::exact(1, w);
  std::vector<RealBall> out(static_cast<size_t>(R - collect_from) + 1,
                            RealBall(w));
  RealBall pw = RealBall::exact(1, w);
  RealBall c(w);
  for (long m = 1; m <= M; ++m) {
    pw *= zb;
    for (int i = R; i >= 1; --i) {
      if (parity && (m % 2) != (i % 2)) continue;
      c = ps[static_cast<size_t>(i) - 1];
      for (int t = 0; t < ks[static_cast<size_t>(i) - 1]; ++t)
        c.div_ui(static_cast<unsigned long>(m));
      if (i >= collect_from) out[static_cast<size_t>(i - collect_from)] += c * pw;
      ps[static_cast<size_t>(i)] += c;
    }
  }
  return out;
}

RealBall eval_common(const Index& k, bool parity, const RealBall& z,
                     double z_hi, mpfr_prec_t p, const SeriesOptions& opt,
                     const char* who) {
  if (!(z_hi > 0) || z_hi >= 1 || z.mid_sign() <= 0 || z.contains_zero())
    throw eval_error(std::string(who) + ": z must lie in (0,1)");
  if (!is_positive_index(k))
    throw eval_error(std::string(who) + ": entries must be >= 1");
  if (k.empty()) return RealBall::exact(1, p);
  const int r = depth(k);
  const int kr = k.back();
  const bool contract = opt.abs_tail_target <= 0;
  double ln_target = contract ? -(static_cast<double>(p) + 20) * std::log(2.0)
                              : std::log(opt.abs_tail_target);
  if (parity) ln_target -= r * std::log(2.0);
  for (int attempt = 0;; ++attempt) {
    mpfr_prec_t w = p + 32 + 32 * attempt;
    long M = choose_terms(z_hi, r, kr, ln_target, opt.max_terms, who);
    RealBall s =
        std::move(series_pass({k.begin(), k.end()}, parity, z, w, M, r)[0]);
    if (parity) s.mul_2exp(r);
    RealBall tb = tail_bound(z, r, kr, M);
    if (parity) tb.mul_2exp(r);
    s.add_error(tb);
    s.round_to(p);
    if (!contract || s.meets_precision(p)) return s;
    if (attempt == 2)
      throw eval_error(std::string(who) + ": requested precision unreachable");
    ln_target -= 16 * std::log(2.0);
  }
}

double ball_upper(const RealBall& z) {
  return z.mid_double() * (1 + 1e-14) + 2 * z.rad_double() + 1e-300;
}

}  // namespace

RealBall li_eval(const Index& k, const Rational& z, mpfr_prec_t p) {
  require_unit_interval(z, "li_eval");
  return eval_common(k, false, RealBall::of_rational(z, p + 128), z.get_d(),
                     p, SeriesOptions{}, "li_eval");
}

RealBall li_eval_opt(const Index& k, const Rational& z, mpfr_prec_t p,
                     const SeriesOptions& opt) {
  require_unit_interval(z, "li_eval");
  return eval_common(k, false, RealBall::of_rational(z, p + 128), z.get_d(),
                     p, opt, "li_eval");
}

RealBall li_eval(const Index& k, const RealBall& z, mpfr_prec_t p,
                 const SeriesOptions& opt) {
  return eval_common(k, false, z, ball_upper(z), p, opt, "li_eval");
}

RealBall a_eval(const Index& k, const Rational& z, mpfr_prec_t p) {
  require_unit_interval(z, "a_eval");
  return eval_common(k, true, RealBall::of_rational(z, p + 128), z.get_d(),
                     p, SeriesOptions{}, "a_eval");
}

RealBall a_eval_opt(const Index& k, const Rational& z, mpfr_prec_t p,
                    const SeriesOptions& opt) {
  require_unit_interval(z, "a_eval");
  return eval_common(k, true, RealBall::of_rational(z, p + 128), z.get_d(),
                     p, opt, "a_eval");
}

RealBall a_eval(const Index& k, const RealBall& z, mpfr_prec_t p,
                const SeriesOptions& opt) {
  return eval_common(k, true, z, ball_upper(z), p, opt, "a_eval");
}

std::vector<RealBall> li_eval_family(const Index& l, int a_max,
                                     const Rational& z, mpfr_prec_t p,
                                     const SeriesOptions& opt) {
  require_unit_interval(z, "li_eval_family");
  if (l.empty() || !is_positive_index(l) || a_max < 0)
    throw eval_error("li_eval_family: need a positive index and a_max >= 0");
  const int r0 = depth(l);
  std::vector<int> ks(l.begin(), l.end());
  ks.insert(ks.end(), static_cast<size_t>(a_max), 1);
  double ln_target = opt.abs_tail_target > 0
                         ? std::log(opt.abs_tail_target)
                         : -(static_cast<double>(p) + 20) * std::log(2.0);
  long M = 0;
  for (int a = 0; a <= a_max; ++a) {
    int kr = (a == 0) ? l.back() : 1;
    M = std::max(M, choose_terms(z.get_d(), r0 + a, kr, ln_target,
                                 opt.max_terms, "li_eval_family"));
  }
  RealBall zb = RealBall::of_rational(z, p + 128);
  std::vector<RealBall> out = series_pass(ks, false, zb, p + 32, M, r0);
  for (int a = 0; a <= a_max; ++a) {
    int kr = (a == 0) ? l.back() : 1;
    out[static_cast<size_t>(a)].add_error(tail_bound(zb, r0 + a, kr, M));
    out[static_cast<size_t>(a)].round_to(p);
  }
  return out;
}

RealBall li_ones(int d, const Rational& z, mpfr_prec_t p) {
  require_unit_interval(z, "li_ones");
  if (d < 0) throw eval_error("li_ones: d must be >= 0");
  mpfr_prec_t w = p + 32;
  RealBall u = -log(RealBall::of_rational(Rational(1) - z, w));
  RealBall out = pow_ui(u, static_cast<unsigned long>(d));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  out /= RealBall::exact(fact, w);
  out.round_to(p);
  return out;
}

RealBall a_ones_frac(int d, const Rational& z, mpfr_prec_t p) {
  require_unit_interval(z, "a_ones_frac");
  if (d < 0) throw eval_error("a_ones_frac: d must be >= 0");
  mpfr_prec_t w = p + 32;
  RealBall u = -log(RealBall::of_rational(z, w));
  RealBall out = pow_ui(u, static_cast<unsigned long>(d));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(d));
  out /= RealBall::exact(fact, w);
  out.round_to(p);
  return out;
}

}  // namespace akzeta
