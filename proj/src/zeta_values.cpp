#include "akzeta/zeta_values.hpp"

#include <cstdio>
#include <string>
#include <vector>

#include "akzeta/cache.hpp"
#include "akzeta/oracle.hpp"
#include "akzeta/series.hpp"
#include "akzeta/word.hpp"

namespace akzeta {

namespace {

// Route state: 0 = split (default), 1 = split, verified, 2 = fallback to
// direct summation after a failed verification.
int g_mzv_route = 0;
int g_mtv_route = 0;

// Reverse the word and exchange its letters. On a suffix of an admissible
// word this is the variable change z -> 1-z (level 1) or z -> (1-z)/(1+z)
// (level 2) applied to the upper half of the split integral.
Word reflect(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (char& c : out) c = (c == '1') ? '0' : '1';
  return out;
}

// Path-composition split of the iterated integral at the point where the
// reflection is an involution: the level-1 forms swap under z -> 1-z with
// fixed point 1/2, the level-2 forms under z -> (1-z)/(1+z) with fixed
// point sqrt(2)-1. Each half is a plain series at the fixed point.
RealBall split_eval(const Index& k, bool level2, mpfr_prec_t p) {
  const Word w = index_to_word(k);
  const size_t n = w.size();
  const mpfr_prec_t wp = p + 48;

  // The split point needs precision headroom: its radius is amplified by
  // roughly the term count inside the series, so give it a margin well
  // past the series' own working precision.
  RealBall point(wp + 96);
  if (level2)
    point = sqrt(RealBall::exact(2, wp + 96)) - RealBall::exact(1, wp + 96);
  else
    point = RealBall::of_rational(Rational(1, 2), wp + 96);

  auto series_at = [&](const Word& u) {
    Index idx = word_to_index(u);
    if (idx.empty()) return RealBall::exact(1, wp);
    return level2 ? a_eval(idx, point, wp) : li_eval(idx, point, wp);
  };

  RealBall acc(wp);
  for (size_t j = 0; j <= n; ++j) {
    RealBall lower = series_at(w.substr(0, j));
    RealBall upper = series_at(reflect(w.substr(j)));
    acc += lower * upper;
  }
  if (level2) acc.mul_2exp(-1);
  acc.round_to(p);
  return acc;
}

RealBall value_common(const Index& k, bool level2, mpfr_prec_t p,
                      const char* who) {
  if (!is_admissible(k))
    throw eval_error(std::string(who) + ": index must be admissible");
  if (k.empty()) {
    if (level2) throw eval_error(std::string(who) + ": index must be non-empty");
    return RealBall::exact(1, p);
  }
  const ConstKey key{level2 ? ConstTag::MTV : ConstTag::MZV, k, 0};
  if (auto hit = ConstCache::instance().get(key, p)) return *hit;
  const int route = level2 ? g_mtv_route : g_mzv_route;
  RealBall v(p);
  if (route == 2) {
    v = level2 ? oracle_mtv(k) : oracle_mzv(k);
  } else {
    v = split_eval(k, level2, p);
  }
  if (v.meets_precision(p)) ConstCache::instance().put(key, v);
  return v;
}

bool route_check_common(bool level2, long max_weight, int* state,
                        const char* who) {
  if (*state != 0) return *state == 1;
  bool ok = true;
  Index cur;
  auto rec = [&](auto&& self, long rem) -> void {
    if (!ok) return;
    if (rem == 0) {
      if (!is_admissible(cur) || cur.empty()) return;
      RealBall split = split_eval(cur, level2, 128);
      RealBall direct = level2 ? oracle_mtv(cur) : oracle_mzv(cur);
      if (!split.overlaps(direct)) {
        std::fprintf(stderr,
                     "%s: split evaluation of %s disagrees with the "
                     "direct-sum oracle; falling back to direct summation\n",
                     who, index_to_string(cur).c_str());
        ok = false;
      }
      return;
    }
    for (long v = 1; v <= rem && ok; ++v) {
      cur.push_back(static_cast<int>(v));
      self(self, rem - v);
      cur.pop_back();
    }
  };
  for (long w = 2; w <= max_weight && ok; ++w) rec(rec, w);
  *state = ok ? 1 : 2;
  return ok;
}

}  // namespace

RealBall mzv(const Index& k, mpfr_prec_t prec) {
  return value_common(k, false, prec, "mzv");
}

RealBall mtv(const Index& k, mpfr_prec_t prec) {
  return value_common(k, true, prec, "mtv");
}

bool mzv_route_check(long max_weight) {
  return route_check_common(false, max_weight, &g_mzv_route, "mzv");
}

bool mtv_route_check(long max_weight) {
  return route_check_common(true, max_weight, &g_mtv_route, "mtv");
}

RealBall ez_zeta_int(const Index& k, int m, mpfr_prec_t prec) {
  if (!is_positive_index(k))
    throw eval_error("ez_zeta_int: prefix entries must be positive");
  if (m < 2) throw eval_error("ez_zeta_int: m must be >= 2");
  Index full = k;
  full.push_back(m);
  return mzv(full, prec);
}

RealBall t_fn_int(const Index& k, int m, mpfr_prec_t prec) {
  if (!is_positive_index(k))
    throw eval_error("t_fn_int: prefix entries must be positive");
  if (m < 2) throw eval_error("t_fn_int: m must be >= 2");
  Index full = k;
  full.push_back(m);
  return mtv(full, prec);
}

namespace {

RealBall shifted_expansion(const Index& k, int m, bool level2, mpfr_prec_t p,
                           const char* who) {
  if (k.empty() || !is_positive_index(k))
    throw eval_error(std::string(who) + ": index entries must be positive");
  if (m < 1) throw eval_error(std::string(who) + ": m must be >= 1");
  const ConstKey key{level2 ? ConstTag::PSI : ConstTag::XI, k, m};
  if (auto hit = ConstCache::instance().get(key, p)) return *hit;

  const mpfr_prec_t wp = p + 32;
  const Index d = dual(e_plus(k));
  RealBall acc(wp);
  for (const NonNegIndex& e : compositions(m - 1, depth(d))) {
    RealBall term = level2 ? mtv(add(d, e), wp) : mzv(add(d, e), wp);
    term *= RealBall::exact(binom_b(d, e), wp);
    acc += term;
  }
  acc.round_to(p);
  if (acc.meets_precision(p)) ConstCache::instance().put(key, acc);
  return acc;
}

}  // namespace

RealBall xi_int(const Index& k, int m, mpfr_prec_t prec) {
  return shifted_expansion(k, m, false, prec, "xi_int");
}

RealBall psi_int(const Index& k, int m, mpfr_prec_t prec) {
  return shifted_expansion(k, m, true, prec, "psi_int");
}

}  // namespace akzeta
