#include "akzeta/identities.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace akzeta {

namespace {

using nlohmann::json;

Index ones(int d) { return Index(static_cast<size_t>(d), 1); }

Index concat(Index a, const Index& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int par(long long e) { return e % 2 == 0 ? 1 : -1; }

// The convergence invariant: plain zeta/T constants may only name
// admissible indices. Builders funnel every such symbol through here, so a
// parameter choice whose expansion hits a divergent series is rejected at
// build time instead of producing a bogus number.
ConstKey value_const(bool level2, const Index& idx) {
  if (!is_admissible(idx)) {
    throw identity_error("divergent constant at index " +
                         index_to_string(idx));
  }
  return {level2 ? ConstTag::MTV : ConstTag::MZV, idx, 0};
}

void push_value_const(Term& t, bool level2, const Index& idx) {
  if (idx.empty()) return;
  t.consts.push_back(value_const(level2, idx));
}

// term_weight plus the trailing integer arguments of shifted symbols.
long long full_weight(const Term& t) {
  long long w = term_weight(t);
  for (const ConstKey& c : t.consts) {
    if (c.tag != ConstTag::MZV && c.tag != ConstTag::MTV) w += c.arg;
  }
  return w;
}

void require_term_weights(const Expr& e, long long w, const char* who) {
  for (const Term& t : e.terms()) {
    if (term_weight(t) != w) {
      throw identity_error(std::string(who) +
                           ": term weight bookkeeping broken");
    }
  }
}

void require_full_weights(const Expr& e, long long w, const char* who) {
  for (const Term& t : e.terms()) {
    if (full_weight(t) != w) {
      throw identity_error(std::string(who) +
                           ": full weight bookkeeping broken");
    }
  }
}

void require_positive_nonempty(const Index& k, const char* who) {
  if (k.empty() || !is_positive_index(k)) {
    throw identity_error(std::string(who) +
                         ": index must be positive and non-empty");
  }
}

std::string params_k(const Index& k) {
  json j;
  j["k"] = k;
  return j.dump();
}

std::string params_km(const Index& k, int m) {
  json j;
  j["k"] = k;
  j["m"] = m;
  return j.dump();
}

std::string params_ab(int a, int b) {
  json j;
  j["a"] = a;
  j["b"] = b;
  return j.dump();
}

std::string params_abm(int a, int b, int m) {
  json j;
  j["a"] = a;
  j["b"] = b;
  j["m"] = m;
  return j.dump();
}

// Shared right-hand side of the reflection/expansion family over the block
// decomposition k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_n-1}, b_n+1):
//
//   [b_n != 0] zeta(k) {* zeta(m+1)}
//   - sum_{l, 0<=j<=b_l-2} (-1)^{j+wt(k^l)}
//       zeta(k_{l-1}, {1}^{a_l-1}, b_l-j) * F((j+1, k^l)~; m+1 or z)
//   + sum_l (-1)^{b_l+wt(k^l)} sum_{d+wt(e1)+wt(e2)=a_l} (-1)^{wt(e1)}
//       b(h; e1) zeta(h+e1) b(v; e2) * G(d) * F(v+e2; m+1+d or z)
//
// with h = (k_{l-1})^dagger, v = (b_l, k^l)~ (~ the comma/plus transpose),
// G(d) = Li({1}^d; reflected z) in the functional form and C(m+d, d) in the
// constant form. Every term has combined index weight wt(k); the trailing
// arguments m+1, m+1+d are excluded from that count.
Expr expansion_rhs(const Index& k, bool level2, bool functional, int m) {
  const BlockForm bf = to_blocks(k);
  const int n = bf.count();
  const ConstTag shifted = level2 ? ConstTag::T_INT : ConstTag::EZ_INT;
  const FunKind fk = level2 ? FunKind::A : FunKind::LI;
  const FunArg refl = level2 ? FunArg::LEVEL2_FRAC : FunArg::ONE_MINUS_Z;
  Expr rhs;

  if (bf.blocks.back().b != 0) {
    Term t;
    push_value_const(t, level2, k);
    if (!functional) t.consts.push_back({shifted, {}, m + 1});
    rhs.add_term(t);
  }

  for (int l = 1; l <= n; ++l) {
    const Index head = head_blocks(k, l - 1);
    const Index tail = tail_blocks(k, l);
    const int al = bf.blocks[static_cast<size_t>(l - 1)].a;
    const int bl = bf.blocks[static_cast<size_t>(l - 1)].b;
    const long long wt = weight(tail);

    for (int j = 0; j <= bl - 2; ++j) {
      Term t;
      t.coeff = Rational(-par(j + wt));
      Index zi = concat(head, ones(al - 1));
      zi.push_back(bl - j);
      push_value_const(t, level2, zi);
      const Index v = hoffman_dual(concat({j + 1}, tail));
      if (functional) {
        t.funs.push_back({fk, v, FunArg::Z});
      } else {
        t.consts.push_back({shifted, v, m + 1});
      }
      rhs.add_term(t);
    }

    const Index h = dual(head);
    const Index v = hoffman_dual(concat({bl}, tail));
    const int base = par(bl + wt);
    for (int d = 0; d <= al; ++d) {
      for (int w1 = 0; w1 + d <= al; ++w1) {
        for (const NonNegIndex& e1 : compositions(w1, depth(h))) {
          for (const NonNegIndex& e2 :
               compositions(al - d - w1, depth(v))) {
            Term t;
            t.coeff = Rational(base * par(w1)) *
                      Rational(binom_b(h, e1) * binom_b(v, e2));
            push_value_const(t, level2, add(h, e1));
            const Index arg2 = add(v, e2);
            if (functional) {
              if (d > 0) t.funs.push_back({fk, ones(d), refl});
              if (!arg2.empty()) t.funs.push_back({fk, arg2, FunArg::Z});
            } else {
              t.binom = std::make_pair(m + d, d);
              t.consts.push_back({shifted, arg2, m + 1 + d});
            }
            rhs.add_term(t);
          }
        }
      }
    }
  }
  return rhs;
}

Identity reflection(const Index& k, bool level2) {
  const char* name = level2 ? "a-reflection" : "li-reflection";
  require_positive_nonempty(k, name);
  Identity id;
  id.name = name;
  id.params_json = params_k(k);
  id.functional = true;
  Term l;
  l.funs.push_back({level2 ? FunKind::A : FunKind::LI, k,
                    level2 ? FunArg::LEVEL2_FRAC : FunArg::ONE_MINUS_Z});
  id.lhs.add_term(l);
  id.rhs = expansion_rhs(k, level2, true, 0);
  require_term_weights(id.lhs, weight(k), name);
  require_term_weights(id.rhs, weight(k), name);
  return id;
}

Identity shifted_expansion(const Index& k, int m, bool level2) {
  const char* name = level2 ? "psi-t-expansion" : "xi-zeta-expansion";
  require_positive_nonempty(k, name);
  if (m < 1) throw identity_error(std::string(name) + ": m must be >= 1");
  Identity id;
  id.name = name;
  id.params_json = params_km(k, m);
  Term l;
  l.consts.push_back({level2 ? ConstTag::PSI : ConstTag::XI, k, m + 1});
  id.lhs.add_term(l);
  id.rhs = expansion_rhs(k, level2, false, m);
  require_term_weights(id.lhs, weight(k), name);
  require_term_weights(id.rhs, weight(k), name);
  return id;
}

// Mirror index ({1}^{m-1}, reverse((c, t)+)) shared by the duality RHS
// pieces: prepend c to t, increment the final entry, reverse entrywise.
Index duality_mirror(int m, int c, const Index& t) {
  Index w = concat({c}, t);
  return concat(ones(m - 1), reverse_blocks(e_plus(w)));
}

Identity duality(const Index& k, int m, bool level2) {
  const char* name = level2 ? "psi-duality" : "xi-duality";
  require_positive_nonempty(k, name);
  if (m < 1) throw identity_error(std::string(name) + ": m must be >= 1");
  const BlockForm bf = to_blocks(k);
  const int n = bf.count();
  const ConstTag shifted = level2 ? ConstTag::T_INT : ConstTag::EZ_INT;
  const ConstTag xs = level2 ? ConstTag::PSI : ConstTag::XI;
  Identity id;
  id.name = name;
  id.params_json = params_km(k, m);

  {
    Term t;
    t.consts.push_back({xs, k, m + 1});
    id.lhs.add_term(t);
  }
  {
    const int a1 = bf.blocks.front().a;
    const int b1 = bf.blocks.front().b;
    Term t;
    t.coeff = Rational(-par(weight(k) - a1));
    t.consts.push_back(
        {xs, duality_mirror(m, b1, tail_blocks(k, 1)), a1 + 1});
    id.lhs.add_term(t);
  }

  if (bf.blocks.back().b != 0) {
    Term t;
    push_value_const(t, level2, k);
    t.consts.push_back({shifted, {}, m + 1});
    id.rhs.add_term(t);
  }
  for (int l = 1; l <= n; ++l) {
    const Index head = head_blocks(k, l - 1);
    const Index tail = tail_blocks(k, l);
    const int al = bf.blocks[static_cast<size_t>(l - 1)].a;
    const int bl = bf.blocks[static_cast<size_t>(l - 1)].b;
    const long long wt = weight(tail);
    for (int j = 0; j <= bl - 2; ++j) {
      Term t;
      t.coeff = Rational(-par(j + wt));
      Index zi = concat(head, ones(al - 1));
      zi.push_back(bl - j);
      push_value_const(t, level2, zi);
      push_value_const(t, level2, duality_mirror(m, j + 2, tail));
      id.rhs.add_term(t);
    }
  }
  for (int l = 2; l <= n; ++l) {
    const Index head = head_blocks(k, l - 1);
    const Index tail = tail_blocks(k, l);
    const int al = bf.blocks[static_cast<size_t>(l - 1)].a;
    const int bl = bf.blocks[static_cast<size_t>(l - 1)].b;
    const long long wt = weight(tail);
    const Index mirror = duality_mirror(m, bl, tail);
    const Index hm = k_minus(head);
    for (int d = 0; d <= al; ++d) {
      Term t;
      t.coeff = Rational(par(bl + wt + d));
      t.consts.push_back({xs, hm, d + 1});
      t.consts.push_back({xs, mirror, al - d + 1});
      id.rhs.add_term(t);
    }
  }
  require_full_weights(id.lhs, weight(k) + m + 1, name);
  require_full_weights(id.rhs, weight(k) + m + 1, name);
  return id;
}

}  // namespace

Identity li_reflection(const Index& k) { return reflection(k, false); }
Identity a_reflection(const Index& k) { return reflection(k, true); }

Identity xi_zeta_expansion(const Index& k, int m) {
  return shifted_expansion(k, m, false);
}

Identity psi_t_expansion(const Index& k, int m) {
  return shifted_expansion(k, m, true);
}

Identity xi_duality(const Index& k, int m) { return duality(k, m, false); }
Identity psi_duality(const Index& k, int m) { return duality(k, m, true); }

Identity li_reflection_depth1(int kk) {
  if (kk < 2) {
    throw identity_error("li-reflection-depth1: need an entry >= 2");
  }
  Identity id;
  id.name = "li-reflection-depth1";
  {
    json j;
    j["k"] = kk;
    id.params_json = j.dump();
  }
  id.functional = true;
  Term l;
  l.funs.push_back({FunKind::LI, {kk}, FunArg::ONE_MINUS_Z});
  id.lhs.add_term(l);

  for (int i = 1; i <= kk - 1; ++i) {
    Term t;
    t.coeff = Rational(par(kk - 1));
    Index v = concat(ones(i - 1), {2});
    v = concat(std::move(v), ones(kk - 1 - i));
    t.funs.push_back({FunKind::LI, v, FunArg::Z});
    id.rhs.add_term(t);
  }
  for (int j = 0; j <= kk - 2; ++j) {
    Term t;
    t.coeff = Rational(par(j));
    t.consts.push_back(value_const(false, {kk - j}));
    if (j > 0) t.funs.push_back({FunKind::LI, ones(j), FunArg::Z});
    id.rhs.add_term(t);
  }
  {
    Term t;
    t.coeff = Rational(par(kk));
    t.funs.push_back({FunKind::LOG, {}, FunArg::Z});
    t.funs.push_back({FunKind::LI, ones(kk - 1), FunArg::Z});
    id.rhs.add_term(t);
  }
  return id;
}

Identity li_reflection_block(int a, int b) {
  if (a < 1 || b < 0) {
    throw identity_error("li-reflection-block: need a >= 1, b >= 0");
  }
  const Index k = concat(ones(a - 1), {b + 1});
  Identity id;
  id.name = "li-reflection-block";
  id.params_json = params_ab(a, b);
  id.functional = true;
  Term l;
  l.funs.push_back({FunKind::LI, k, FunArg::Z});
  id.lhs.add_term(l);

  for (int j = 0; j <= b - 1; ++j) {
    Term t;
    t.coeff = Rational(par(j));
    Index zi = concat(ones(a - 1), {b + 1 - j});
    t.consts.push_back(value_const(false, zi));
    if (j > 0) t.funs.push_back({FunKind::LI, ones(j), FunArg::ONE_MINUS_Z});
    id.rhs.add_term(t);
  }
  for (int d = 0; d <= a; ++d) {
    for (const NonNegIndex& e : compositions(a - d, b)) {
      Term t;
      t.coeff = Rational(par(b));
      if (d > 0) t.funs.push_back({FunKind::LI, ones(d), FunArg::Z});
      const Index v = add(ones(b), e);
      if (!v.empty()) {
        t.funs.push_back({FunKind::LI, v, FunArg::ONE_MINUS_Z});
      }
      id.rhs.add_term(t);
    }
  }
  require_term_weights(id.lhs, a + b, "li-reflection-block");
  require_term_weights(id.rhs, a + b, "li-reflection-block");
  return id;
}

Identity xi_zeta_expansion_block(int a, int b, int m) {
  if (a < 1 || b < 0 || m < 1) {
    throw identity_error(
        "xi-zeta-expansion-block: need a >= 1, b >= 0, m >= 1");
  }
  const Index k = concat(ones(a - 1), {b + 1});
  Identity id;
  id.name = "xi-zeta-expansion-block";
  id.params_json = params_abm(a, b, m);
  Term l;
  l.consts.push_back({ConstTag::XI, k, m + 1});
  id.lhs.add_term(l);

  for (int j = 0; j <= b - 1; ++j) {
    Term t;
    t.coeff = Rational(par(j));
    Index zi = concat(ones(a - 1), {b + 1 - j});
    t.consts.push_back(value_const(false, zi));
    t.consts.push_back({ConstTag::EZ_INT, ones(j), m + 1});
    id.rhs.add_term(t);
  }
  for (int d = 0; d <= a; ++d) {
    for (const NonNegIndex& e : compositions(a - d, b)) {
      Term t;
      t.coeff = Rational(par(b));
      t.binom = std::make_pair(m + d, d);
      t.consts.push_back({ConstTag::EZ_INT, add(ones(b), e), m + 1 + d});
      id.rhs.add_term(t);
    }
  }
  require_term_weights(id.lhs, a + b, "xi-zeta-expansion-block");
  require_term_weights(id.rhs, a + b, "xi-zeta-expansion-block");
  return id;
}

Identity xi_duality_block(int a, int b, int m) {
  if (a < 1 || b < 0 || m < 1) {
    throw identity_error("xi-duality-block: need a >= 1, b >= 0, m >= 1");
  }
  Identity id;
  id.name = "xi-duality-block";
  id.params_json = params_abm(a, b, m);
  {
    Term t;
    t.consts.push_back({ConstTag::XI, concat(ones(a - 1), {b + 1}), m + 1});
    id.lhs.add_term(t);
  }
  {
    Term t;
    t.coeff = Rational(-par(b));
    t.consts.push_back({ConstTag::XI, concat(ones(m - 1), {b + 1}), a + 1});
    id.lhs.add_term(t);
  }
  for (int j = 0; j <= b - 1; ++j) {
    Term t;
    t.coeff = Rational(par(j));
    t.consts.push_back(value_const(false, concat(ones(a - 1), {b + 1 - j})));
    t.consts.push_back(value_const(false, concat(ones(m - 1), {j + 2})));
    id.rhs.add_term(t);
  }
  require_full_weights(id.lhs, a + b + m + 1, "xi-duality-block");
  require_full_weights(id.rhs, a + b + m + 1, "xi-duality-block");
  return id;
}

Identity xi_duality_multi(int a, int m, const Index& ks, SignReading reading) {
  if (a < 1 || m < 1) {
    throw identity_error("xi-duality-multi: need a >= 1, m >= 1");
  }
  if (ks.empty()) {
    throw identity_error("xi-duality-multi: need at least one entry");
  }
  for (int v : ks) {
    if (v < 2) throw identity_error("xi-duality-multi: entries must be >= 2");
  }
  const int r = static_cast<int>(ks.size());
  // Ascending k_i..k_j and descending k_i..k_j slices, 1-based inclusive.
  auto asc = [&](int i, int j) {
    Index v;
    for (int t = i; t <= j; ++t) v.push_back(ks[static_cast<size_t>(t - 1)]);
    return v;
  };
  auto desc = [&](int i, int j) {
    Index v;
    for (int t = i; t >= j; --t) v.push_back(ks[static_cast<size_t>(t - 1)]);
    return v;
  };
  auto sumk = [&](int i, int j) {
    long long s = 0;
    for (int t = i; t <= j; ++t) s += ks[static_cast<size_t>(t - 1)];
    return s;
  };

  Identity id;
  id.name = "xi-duality-multi";
  {
    json j;
    j["a"] = a;
    j["m"] = m;
    j["ks"] = ks;
    j["reading"] = reading == SignReading::AsPrinted    ? "as-printed"
                   : reading == SignReading::ShiftedSign ? "shifted-sign"
                                                         : "corrected";
    id.params_json = j.dump();
  }

  {
    Index left = concat(ones(a - 1), asc(1, r));
    left.back() -= 1;
    Term t;
    t.consts.push_back({ConstTag::XI, left, m + 1});
    id.lhs.add_term(t);
  }
  {
    Index right = concat(ones(m - 1), desc(r, 2));
    right.push_back(ks.front() - 1);
    Term t;
    t.coeff = Rational(-par(sumk(1, r)));
    t.consts.push_back({ConstTag::XI, right, a + 1});
    id.lhs.add_term(t);
  }

  for (int j = 0; j <= r - 1; ++j) {
    const int s1 = par(sumk(j + 2, r));
    const int kj1 = ks[static_cast<size_t>(j)];
    for (int i = 1; i <= kj1 - 2; ++i) {
      Term t;
      t.coeff = Rational(s1 * par(i - 1));
      Index c1 = concat(ones(m - 1), desc(r, j + 2));
      c1.push_back(i + 1);
      Index c2 = concat(ones(a - 1), asc(1, j));
      c2.push_back(kj1 - i);
      t.consts.push_back(value_const(false, c1));
      t.consts.push_back(value_const(false, c2));
      id.rhs.add_term(t);
    }
  }
  for (int j = 0; j <= r - 2; ++j) {
    if (reading == SignReading::Corrected) {
      const int sg = par(sumk(j + 2, r));
      {
        Term t;
        t.coeff = Rational(sg);
        t.consts.push_back(
            value_const(false, concat(ones(a - 1), asc(1, j + 1))));
        Index x = concat(ones(m - 1), desc(r, j + 2));
        x.back() -= 1;
        t.consts.push_back({ConstTag::XI, x, 2});
        id.rhs.add_term(t);
      }
      {
        Term t;
        t.coeff = Rational(-sg);
        Index x = concat(ones(a - 1), asc(1, j + 1));
        x.back() -= 1;
        t.consts.push_back({ConstTag::XI, x, 2});
        t.consts.push_back(
            value_const(false, concat(ones(m - 1), desc(r, j + 2))));
        id.rhs.add_term(t);
      }
      continue;
    }
    // Sign exponent of the typeset correction sum: as printed it starts at
    // the j-th entry (vacuous zeroth entry), the shifted reading one later.
    // The two agree whenever r <= 2.
    const long long ej = reading == SignReading::AsPrinted
                             ? sumk(std::max(j, 1), r)
                             : sumk(j + 1, r);
    const int sg = par(ej);
    {
      Term t;
      t.coeff = Rational(sg);
      t.consts.push_back(value_const(false, concat(ones(a - 1), asc(1, j + 1))));
      Index x = concat(ones(m - 1), desc(r, j + 2));
      x.back() -= 1;
      t.consts.push_back({ConstTag::XI, x, 2});
      id.rhs.add_term(t);
    }
    {
      Term t;
      t.coeff = Rational(-sg);
      push_value_const(t, false, concat(ones(a - 1), asc(1, j)));
      Index x = concat(ones(m - 1), desc(r, j + 1));
      x.back() -= 1;
      t.consts.push_back({ConstTag::XI, x, 2});
      id.rhs.add_term(t);
    }
  }
  const long long w = a + m + sumk(1, r) - 1;
  require_full_weights(id.lhs, w, "xi-duality-multi");
  require_full_weights(id.rhs, w, "xi-duality-multi");
  return id;
}

VerificationReport verify(const Identity& id, const VerifyOptions& opt) {
  VerificationReport rep;
  rep.identity = id.name;
  rep.params_json = id.params_json;
  rep.tol = opt.tol;
  rep.note = id.note;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  try {
    std::vector<std::optional<Rational>> pts;
    if (id.functional) {
      if (opt.zs.empty()) {
        throw eval_error("functional identity needs a z grid");
      }
      for (const Rational& z : opt.zs) {
        if (z < Rational(1, 20) || z > Rational(19, 20)) {
          throw eval_error("z outside [0.05, 0.95]");
        }
        pts.emplace_back(z);
      }
    } else {
      pts.emplace_back(std::nullopt);
    }
    EvalMemo memo;
    for (const auto& pz : pts) {
      memo.funs.clear();
      EvalOptions eo;
      eo.prec = opt.prec;
      eo.z = pz;
      eo.xi_route = opt.xi_route;
      eo.audit = opt.audit;
      eo.memo = &memo;
      const RealBall lv = eval_expr(id.lhs, eo);
      RealBall rv = eval_expr(id.rhs, eo);
      if (opt.rhs_shift != 0.0) {
        rv += RealBall::of_double(opt.rhs_shift, opt.prec);
      }
      RealBall diff = lv;
      diff -= rv;
      PointReport pr;
      pr.has_z = pz.has_value();
      if (pr.has_z) pr.z = *pz;
      pr.lhs = lv.mid_decimal(30);
      pr.rhs = rv.mid_decimal(30);
      pr.dev = std::fabs(diff.mid_double());
      pr.rad = diff.rad_double();
      rep.points.push_back(pr);
      rep.max_dev = std::max(rep.max_dev, pr.dev);
      if (!diff.dev_within(opt.tol)) ok = false;
    }
    rep.pass = ok;
  } catch (const std::exception& ex) {
    rep.pass = false;
    rep.note = rep.note.empty() ? std::string(ex.what())
                                : rep.note + "; " + ex.what();
  }
  rep.ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return rep;
}

VerificationReport verify_xi_duality_multi(int a, int m, const Index& ks,
                                           const VerifyOptions& opt) {
  auto run = [&](SignReading r) {
    try {
      return verify(xi_duality_multi(a, m, ks, r), opt);
    } catch (const std::exception& ex) {
      VerificationReport rep;
      json j;
      j["a"] = a;
      j["m"] = m;
      j["ks"] = ks;
      rep.identity = "xi-duality-multi";
      rep.params_json = j.dump();
      rep.tol = opt.tol;
      rep.pass = false;
      rep.note = ex.what();
      return rep;
    }
  };
  VerificationReport printed = run(SignReading::AsPrinted);
  if (printed.pass) return printed;
  VerificationReport shifted = run(SignReading::ShiftedSign);
  if (shifted.pass) return shifted;
  VerificationReport corrected = run(SignReading::Corrected);
  if (corrected.pass) {
    corrected.note = corrected.note.empty()
                         ? "as-printed reading fails numerically"
                         : corrected.note + "; as-printed reading fails numerically";
    return corrected;
  }
  return printed;
}

std::string VerificationReport::to_json() const {
  json j;
  j["identity"] = identity;
  j["params"] =
      params_json.empty() ? json::object() : json::parse(params_json);
  json pts = json::array();
  for (const PointReport& p : points) {
    json q;
    if (p.has_z) q["z"] = p.z.get_d();
    q["lhs"] = p.lhs;
    q["rhs"] = p.rhs;
    q["dev"] = p.dev;
    q["rad"] = p.rad;
    pts.push_back(q);
  }
  j["points"] = pts;
  j["max_dev"] = max_dev;
  j["tol"] = tol;
  j["pass"] = pass;
  j["ms"] = ms;
  if (!note.empty()) j["note"] = note;
  return j.dump(2);
}

std::string VerificationReport::summary() const {
  char dev[32];
  char tl[32];
  std::snprintf(dev, sizeof dev, "%.2e", max_dev);
  std::snprintf(tl, sizeof tl, "%.2e", tol);
  std::ostringstream os;
  os << identity << " " << params_json;
  if (points.size() > 1) os << " [" << points.size() << " points]";
  os << " max dev " << dev << " tol " << tl << (pass ? " pass" : " FAIL")
     << " (" << ms << " ms)";
  if (!pass && !note.empty()) os << " [" << note << "]";
  return os.str();
}

}  // namespace akzeta
