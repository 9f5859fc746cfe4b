#include "akzeta/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace akzeta {

namespace {

constexpr mpfr_prec_t kOraclePrec = 64;

// Envelope polynomials in v = ln(n / Na); coefficient t multiplies v^t.
using Poly = std::vector<RealBall>;

RealBall zero_ball() { return RealBall::exact(0, kOraclePrec); }

Poly poly_antider(const Poly& a) {
  Poly out(a.size() + 1, zero_ball());
  for (size_t t = 0; t < a.size(); ++t) {
    out[t + 1] = a[t];
    out[t + 1].div_ui(static_cast<unsigned long>(t + 1));
  }
  return out;
}

Poly poly_deriv(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1, zero_ball());
  for (size_t t = 0; t + 1 < a.size(); ++t) {
    out[t] = a[t + 1];
    out[t].mul_ui(static_cast<unsigned long>(t + 1));
  }
  return out;
}

Poly poly_add(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), zero_ball());
  for (size_t t = 0; t < b.size(); ++t) a[t] += b[t];
  return a;
}

RealBall poly_eval(const Poly& a, const RealBall& x) {
  RealBall acc = zero_ball();
  for (size_t t = a.size(); t-- > 0;) acc = acc * x + a[t];
  return acc;
}

void poly_div_ui(Poly& a, unsigned long d) {
  if (d == 1) return;
  for (auto& c : a) c.div_ui(d);
}

// x -> W(ln(x/Na)) / x^k is decreasing on x >= Na once k*w_t >= (t+1)*w_{t+1}
// for every coefficient, all coefficients nonnegative. Checked rigorously on
// the coefficient balls; a failure aborts the envelope route.
bool envelope_decreasing(const Poly& w, int k) {
  for (size_t t = 0; t < w.size(); ++t) {
    if (!w[t].surely_nonneg()) return false;
    RealBall d = w[t];
    d.mul_ui(static_cast<unsigned long>(k));
    if (t + 1 < w.size()) {
      RealBall e = w[t + 1];
      e.mul_ui(static_cast<unsigned long>(t + 1));
      d -= e;
    }
    if (!d.surely_nonneg()) return false;
  }
  return true;
}

// I_t = int_L^inf v^t e^{-c v} dv for t = 0..deg, by parts:
// I_0 = e^{-cL}/c, I_t = (L^t e^{-cL} + t I_{t-1}) / c.
std::vector<RealBall> exp_integrals(int c, const RealBall& L, size_t deg) {
  std::vector<RealBall> I(deg + 1, zero_ball());
  RealBall cL = L;
  cL.mul_ui(static_cast<unsigned long>(c));
  RealBall E = exp(-cL);
  I[0] = E;
  I[0].div_ui(static_cast<unsigned long>(c));
  RealBall Lpow = RealBall::exact(1, kOraclePrec);
  for (size_t t = 1; t <= deg; ++t) {
    Lpow *= L;
    RealBall prev = I[t - 1];
    prev.mul_ui(static_cast<unsigned long>(t));
    I[t] = Lpow * E + prev;
    I[t].div_ui(static_cast<unsigned long>(c));
  }
  return I;
}

RealBall log_ratio(long num, long den) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return log(RealBall::of_rational(q, kOraclePrec));
}

// int_{Na e^L}^inf W(ln(x/Na)) x^{-k} dx = Na^{1-k} sum_t w_t I_t(k-1, L),
// for k >= 2.
RealBall envelope_integral(const Poly& w, int k, long Na, const RealBall& L) {
  if (w.empty()) return zero_ball();
  std::vector<RealBall> I = exp_integrals(k - 1, L, w.size() - 1);
  RealBall acc = zero_ball();
  for (size_t t = 0; t < w.size(); ++t) acc += w[t] * I[t];
  Integer d;
  mpz_pow_ui(d.get_mpz_t(), Integer(Na).get_mpz_t(),
             static_cast<unsigned long>(k - 1));
  Rational scale(Integer(1), d);
  scale.canonicalize();
  return acc * RealBall::of_rational(scale, kOraclePrec);
}

struct envelope_fail {};

// Two-sided envelope for a prefix level's partial-sum function:
//   anchor + lo_p(v) - lo_q(v)  <=  F_i(n)  <=  anchor + up(v)
// valid at every integer n >= Na, v = ln(n/Na), all polynomial coefficients
// nonnegative. Empty polynomials mean the anchor-only bound.
struct Env {
  RealBall anchor = zero_ball();
  Poly up, lo_p, lo_q;
};

Poly with_const(Poly p, const RealBall& c) {
  if (p.empty()) p.push_back(zero_ball());
  p[0] += c;
  return p;
}

// q-side penalty for reading the envelope at m'-1 instead of m':
// P(v(m'-1)) >= P(v(m')) - P'(v(m'))/Na by convexity, ln(m'/(m'-1)) <= 1/Na.
Poly shift_penalty(const Poly& pfull, long Na) {
  Poly pd = poly_deriv(pfull);
  for (auto& c : pd) c.div_ui(static_cast<unsigned long>(Na));
  return pd;
}

// Direct summation of the chain sum
//   sum_{0 < m_1 < ... < m_r} prod m_i^{-k_i}
// (sigma = 2 additionally restricts level i to m_i = i mod 2) with the tail
// past N enclosed by the envelope sandwich described in the header.
RealBall chain_sum_enclosure(const Index& k, long N, int sigma) {
  const int r = static_cast<int>(k.size());
  const long Na = N - 2;

  // Exact partial sums to N; per-level anchors recorded at Na.
  std::vector<RealBall> F(static_cast<size_t>(r) + 1, zero_ball());
  F[0] = RealBall::exact(1, kOraclePrec);
  std::vector<RealBall> anchors(static_cast<size_t>(r), zero_ball());
  anchors[0] = F[0];
  for (long m = 1; m <= N; ++m) {
    for (int i = r; i >= 1; --i) {
      if (sigma == 2 && (m % 2) != (i % 2)) continue;
      RealBall t = F[i - 1];
      for (int j = 0; j < k[i - 1]; ++j)
        t.div_ui(static_cast<unsigned long>(m));
      F[i] += t;
    }
    if (m == Na)
      for (int i = 1; i < r; ++i) anchors[i] = F[i];
  }

  const RealBall vNa2 = log_ratio(Na + 2, Na);
  const int kr = k[r - 1];
  const RealBall vup = log_ratio(N + 1 - sigma, Na);
  const RealBall vlo = log_ratio(N + sigma, Na);

  // One parity point (m' = Na+1) can sit below the integral comparison
  // range when sigma = 2; bound its term separately.
  auto below_range_term = [&](const Poly& w, int ki) {
    RealBall extra = zero_ball();
    if (sigma == 2) {
      extra = poly_eval(w, vNa2);
      for (int j = 0; j < ki; ++j)
        extra.div_ui(static_cast<unsigned long>(Na + 1));
    }
    return extra;
  };

  auto build = [&]() -> std::pair<RealBall, RealBall> {
    Env env;
    env.anchor = RealBall::exact(1, kOraclePrec);
    for (int i = 1; i <= r - 1; ++i) {
      const int ki = k[i - 1];
      Env next;
      next.anchor = anchors[i];

      Poly whi = with_const(env.up, env.anchor);
      if (!envelope_decreasing(whi, ki)) throw envelope_fail{};
      RealBall extra = below_range_term(whi, ki);
      if (ki == 1) {
        Poly J = poly_antider(whi);
        poly_div_ui(J, static_cast<unsigned long>(sigma));
        J[0] += extra;
        next.up = J;
      } else {
        RealBall tau =
            envelope_integral(whi, ki, Na, zero_ball());
        tau.div_ui(static_cast<unsigned long>(sigma));
        next.up = {tau + extra};
      }

      // Lower envelopes only tighten the result; the anchor-only bound is
      // always valid, so a failed check here just degrades width.
      if (ki == 1) {
        Poly pfull = with_const(env.lo_p, env.anchor);
        Poly qpre = poly_add(env.lo_q, shift_penalty(pfull, Na));
        if (envelope_decreasing(pfull, ki) &&
            envelope_decreasing(qpre, ki)) {
          Poly Jp = poly_antider(pfull);
          poly_div_ui(Jp, static_cast<unsigned long>(sigma));
          RealBall qc = poly_eval(Jp, log_ratio(Na + sigma, Na));
          qc += below_range_term(qpre, ki);
          Poly Jq = poly_antider(qpre);
          poly_div_ui(Jq, static_cast<unsigned long>(sigma));
          next.lo_p = Jp;
          next.lo_q = with_const(Jq, qc);
        }
      }
      env = std::move(next);
    }

    Poly whi = with_const(env.up, env.anchor);
    if (!envelope_decreasing(whi, kr)) throw envelope_fail{};
    RealBall thi = envelope_integral(whi, kr, Na, vup);
    thi.div_ui(static_cast<unsigned long>(sigma));

    Poly pfull = with_const(env.lo_p, env.anchor);
    Poly qpre = poly_add(env.lo_q, shift_penalty(pfull, Na));
    RealBall tlo;
    if (envelope_decreasing(pfull, kr) && envelope_decreasing(qpre, kr)) {
      tlo = envelope_integral(pfull, kr, Na, vlo);
      tlo.div_ui(static_cast<unsigned long>(sigma));
      if (!qpre.empty()) {
        RealBall tq = envelope_integral(qpre, kr, Na, vup);
        tq.div_ui(static_cast<unsigned long>(sigma));
        tlo -= tq;
      }
    } else {
      Poly pa = {env.anchor};
      tlo = envelope_integral(pa, kr, Na, vlo);
      tlo.div_ui(static_cast<unsigned long>(sigma));
    }
    return {tlo, thi};
  };

  std::pair<RealBall, RealBall> bounds;
  try {
    bounds = build();
  } catch (const envelope_fail&) {
    // Coarse route: every prefix partial sum obeys
    // F_{r-1}(m) <= (1 + ln m)^{r-1} / (r-1)!; expand around Na.
    std::fprintf(stderr,
                 "oracle: envelope check failed, using coarse tail bound\n");
    RealBall c0 =
        RealBall::exact(1, kOraclePrec) +
        log(RealBall::exact(Na, kOraclePrec));
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(r - 1));
    Poly w(static_cast<size_t>(r), zero_ball());
    for (int t = 0; t <= r - 1; ++t) {
      Rational c(binomial(r - 1, t), fact);
      c.canonicalize();
      w[t] = RealBall::of_rational(c, kOraclePrec) *
             pow_ui(c0, static_cast<unsigned long>(r - 1 - t));
    }
    if (!envelope_decreasing(w, kr))
      throw eval_error("oracle: no valid tail bound for this index");
    RealBall thi = envelope_integral(w, kr, Na, vup);
    thi.div_ui(static_cast<unsigned long>(sigma));
    Poly pa = {anchors.empty() ? zero_ball() : anchors[r - 1]};
    RealBall tlo = envelope_integral(pa, kr, Na, vlo);
    tlo.div_ui(static_cast<unsigned long>(sigma));
    bounds = {tlo, thi};
  }

  RealBall tail = bounds.first + bounds.second;
  tail.mul_2exp(-1);
  RealBall halfwidth = bounds.second - bounds.first;
  halfwidth.mul_2exp(-1);
  tail.add_error(halfwidth);
  return F[r] + tail;
}

void require_oracle_index(const Index& k, const char* who) {
  if (!is_positive_index(k))
    throw eval_error(std::string(who) + ": index entries must be positive");
  if (k.empty() || k.back() < 2)
    throw eval_error(std::string(who) + ": index must end in an entry >= 2");
}

// Compensated double-precision DP over the chain recursion, with explicit
// floating-point and truncation budgets. Independent of the ball engine.
RealBall power_series_reference(const Index& k, const Rational& z,
                                bool parity, const char* who) {
  if (k.empty() || !is_positive_index(k))
    throw eval_error(std::string(who) + ": index entries must be positive");
  const double zd = mpq_get_d(z.get_mpq_t());
  if (!(zd > 0.0) || zd > 0.97)
    throw eval_error(std::string(who) + ": z must lie in (0, 0.97]");
  const int r = static_cast<int>(k.size());

  long M = static_cast<long>(
               std::ceil(16.0 * std::log(10.0) / -std::log(zd))) +
           40;
  if (M < 80) M = 80;

  std::vector<double> F(static_cast<size_t>(r) + 1, 0.0);
  F[0] = 1.0;
  double S = 0.0, comp = 0.0, zpow = 1.0, maxmag = 1.0;
  for (long m = 1; m <= M; ++m) {
    zpow *= zd;
    for (int i = r; i >= 1; --i) {
      if (parity && (m % 2) != (i % 2)) continue;
      double t = F[i - 1];
      for (int j = 0; j < k[i - 1]; ++j) t /= static_cast<double>(m);
      if (i == r) {
        t *= zpow;
        const double y = t - comp;
        const double s2 = S + y;
        comp = (s2 - S) - y;
        S = s2;
      } else {
        F[i] += t;
        if (F[i] > maxmag) maxmag = F[i];
      }
    }
  }
  if (S > maxmag) maxmag = S;

  // Roundoff: every partial result passes through at most
  // M * (wt + 2r) operations at magnitude <= maxmag, relative error
  // 2^-53 each; factor 8 of slack. Argument conversion: |z - zd| <= ulp,
  // |dS/dz| <= M (S + 1) / z crudely.
  const double u = std::ldexp(1.0, -53);
  const long wt = weight(k);
  double err = 8.0 * u * maxmag * static_cast<double>(M) *
               static_cast<double>(wt + 2 * r);
  err += 2.0 * u * static_cast<double>(M) * (S + 1.0);
  // Tail: chain counts obey c(m) <= (1+ln m)^{r-1}/(r-1)! <= 2^{r-1}
  // m^{(r-1)/2}/(r-1)!, then a geometric envelope.
  double fact = 1.0;
  for (int j = 2; j <= r - 1; ++j) fact *= j;
  const double zeff =
      zd * std::exp(static_cast<double>(r) / static_cast<double>(M + 1));
  if (!(zeff < 0.999))
    throw eval_error(std::string(who) + ": truncation bound unavailable");
  double tail = std::ldexp(1.0, r - 1) / fact *
                std::pow(zd, static_cast<double>(M + 1)) *
                std::pow(static_cast<double>(M + 1),
                         static_cast<double>(r - 1) / 2.0) /
                (1.0 - zeff);
  tail *= 1.1;

  double scale = 1.0;
  if (parity) scale = std::ldexp(1.0, r);
  RealBall out = RealBall::of_double(S * scale, kOraclePrec);
  out.add_error(RealBall::of_double((err + tail) * scale, kOraclePrec));
  return out;
}

}  // namespace

RealBall oracle_mzv(const Index& k, long terms) {
  if (k.empty()) return RealBall::exact(1, kOraclePrec);
  require_oracle_index(k, "oracle_mzv");
  if (terms < 1000) terms = 1000;
  return chain_sum_enclosure(k, terms, 1);
}

RealBall oracle_mtv(const Index& k, long terms) {
  require_oracle_index(k, "oracle_mtv");
  if (terms < 1000) terms = 1000;
  RealBall out = chain_sum_enclosure(k, terms, 2);
  out.mul_2exp(static_cast<long>(k.size()) - 1);
  return out;
}

RealBall oracle_li(const Index& k, const Rational& z) {
  return power_series_reference(k, z, false, "oracle_li");
}

RealBall oracle_a(const Index& k, const Rational& z) {
  return power_series_reference(k, z, true, "oracle_a");
}

}  // namespace akzeta
