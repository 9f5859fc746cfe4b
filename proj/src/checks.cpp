#include "akzeta/checks.hpp"

#include <algorithm>
#include <cmath>

#include "akzeta/series.hpp"
#include "akzeta/zeta_values.hpp"

namespace akzeta {

bool derivative_check(DerivKind kind, const Index& k, const Rational& z,
                      mpfr_prec_t prec, double tol) {
  if (k.empty() || !is_positive_index(k))
    throw eval_error("derivative_check: need a non-empty positive index");
  Rational margin{Integer(1), Integer(1024)};
  margin.canonicalize();
  if (!(z > margin) || !(z < Rational(1) - margin))
    throw eval_error("derivative_check: z too close to the interval ends");
  Rational h{Integer(1), Integer(1) << 37};
  h.canonicalize();
  Rational lo = z - h, hi = z + h;

  auto F = [&](const Index& idx, const Rational& at) {
    return kind == DerivKind::LI ? li_eval(idx, at, prec)
                                 : a_eval(idx, at, prec);
  };

  RealBall fd = F(k, hi) - F(k, lo);
  fd /= RealBall::of_rational(h + h, prec);

  RealBall rhs(prec);
  if (k.back() >= 2) {
    Index dec = k;
    --dec.back();
    rhs = F(dec, z) / RealBall::of_rational(z, prec);
  } else {
    Index drop(k.begin(), k.end() - 1);
    if (kind == DerivKind::LI) {
      rhs = F(drop, z) / RealBall::of_rational(Rational(1) - z, prec);
    } else {
      Rational den = (Rational(1) - z) * (Rational(1) + z);
      rhs = F(drop, z) / RealBall::of_rational(den, prec);
      rhs.mul_2exp(1);
    }
  }
  return (fd - rhs).dev_within(tol);
}

bool limit_lemma_check(const Index& l, int a, mpfr_prec_t prec, double tol,
                       std::vector<double>* devs) {
  if (l.empty() || !is_admissible(l))
    throw eval_error("limit_lemma_check: l must be a non-empty admissible index");
  if (a < 0 || a > 8) throw eval_error("limit_lemma_check: a out of range");
  if (devs) devs->clear();
  const mpfr_prec_t cp = std::max<mpfr_prec_t>(prec, 128);

  Index ld = dual(l);
  const int n = static_cast<int>(ld.size());
  std::vector<RealBall> c;  // c[w] = sum_{wt(e)=w} b(l^dagger;e) zeta(l^dagger+e)
  for (int w = 0; w <= a; ++w) {
    RealBall s(cp);
    for (const NonNegIndex& e : compositions(w, n))
      s += mzv(add(ld, e), cp) * RealBall::exact(binom_b(ld, e), cp);
    c.push_back(std::move(s));
  }
  RealBall limit = c[static_cast<size_t>(a)];
  if (a % 2) limit.neg();

  Index full = l;
  for (int i = 0; i < a; ++i) full.push_back(1);

  // Near z = 1 the truncation point, not the precision, is the cost driver:
  // run the series at modest precision with an absolute tail target well
  // below the tolerance regime.
  SeriesOptions opt;
  opt.max_terms = 60000000;
  opt.abs_tail_target = 1e-8;
  const mpfr_prec_t sp = 64;

  bool ok = true;
  double prev = 0;
  for (int j = 2; j <= 6; ++j) {
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(j));
    Rational z{p10 - 1, p10};
    z.canonicalize();
    RealBall bracket = li_eval_opt(full, z, sp, opt);
    for (int d = 1; d <= a; ++d) {
      RealBall term =
          c[static_cast<size_t>(a - d)] * li_ones(d, z, cp);
      if ((a - d) % 2) term.neg();
      bracket -= term;
    }
    RealBall diff = bracket - limit;
    double dev = std::fabs(diff.mid_double()) + diff.rad_double();
    if (devs) devs->push_back(dev);
    if (j > 2 && !(dev < prev)) ok = false;
    prev = dev;
  }
  return ok && prev <= tol;
}

}  // namespace akzeta
