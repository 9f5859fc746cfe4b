#include "akzeta/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "akzeta/oracle.hpp"
#include "akzeta/poset.hpp"
#include "akzeta/series.hpp"
#include "akzeta/zeta_values.hpp"

namespace akzeta {

namespace {

bool all_ones(const Index& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v == 1; });
}

Index with_trailing(const Index& k, int m) {
  Index out = k;
  out.push_back(m);
  return out;
}

std::string const_to_string(const ConstKey& c) {
  std::string s = const_tag_name(c.tag);
  s += index_to_string(c.index);
  if (c.tag != ConstTag::MZV && c.tag != ConstTag::MTV) {
    s += ";" + std::to_string(c.arg);
  }
  return s;
}

std::string fun_to_string(const FunFactor& f) {
  std::string s = fun_kind_name(f.kind);
  if (f.kind != FunKind::LOG) s += index_to_string(f.index);
  s += "@";
  s += fun_arg_name(f.arg);
  return s;
}

bool oracle_too_wide(const RealBall& o, double digits) {
  return o.rad_double() >
         std::max(1.0, std::fabs(o.mid_double())) * std::pow(10.0, -digits);
}

}  // namespace

const char* fun_kind_name(FunKind k) {
  switch (k) {
    case FunKind::LI: return "Li";
    case FunKind::A: return "A";
    case FunKind::LOG: return "log";
  }
  return "?";
}

const char* fun_arg_name(FunArg a) {
  switch (a) {
    case FunArg::Z: return "z";
    case FunArg::ONE_MINUS_Z: return "1-z";
    case FunArg::LEVEL2_FRAC: return "(1-z)/(1+z)";
  }
  return "?";
}

void Term::normalize_factors() {
  std::sort(consts.begin(), consts.end());
  std::sort(funs.begin(), funs.end());
}

bool same_key(const Term& s, const Term& t) {
  return s.consts == t.consts && s.funs == t.funs && s.binom == t.binom;
}

bool key_less(const Term& s, const Term& t) {
  if (s.consts != t.consts) return s.consts < t.consts;
  if (s.funs != t.funs) return s.funs < t.funs;
  return s.binom < t.binom;
}

long long term_weight(const Term& t) {
  long long w = 0;
  for (const ConstKey& c : t.consts) w += weight(c.index);
  for (const FunFactor& f : t.funs) w += weight(f.index);
  if (t.binom) w += t.binom->second;
  return w;
}

void Expr::add_term(Term t) {
  if (t.coeff == 0) return;
  t.normalize_factors();
  terms_.push_back(std::move(t));
}

Expr& Expr::operator+=(const Expr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

Expr Expr::canonical() const {
  Expr out = *this;
  std::stable_sort(out.terms_.begin(), out.terms_.end(), key_less);
  std::vector<Term> merged;
  for (Term& t : out.terms_) {
    if (!merged.empty() && same_key(merged.back(), t)) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  out.terms_ = std::move(merged);
  return out;
}

bool operator==(const Expr& a, const Expr& b) {
  const Expr ca = a.canonical();
  const Expr cb = b.canonical();
  if (ca.terms_.size() != cb.terms_.size()) return false;
  for (size_t i = 0; i < ca.terms_.size(); ++i) {
    if (!same_key(ca.terms_[i], cb.terms_[i])) return false;
    if (ca.terms_[i].coeff != cb.terms_[i].coeff) return false;
  }
  return true;
}

Expr Expr::swapped_z() const {
  Expr out = *this;
  for (Term& t : out.terms_) {
    for (FunFactor& f : t.funs) {
      if (f.arg == FunArg::Z) {
        f.arg = FunArg::ONE_MINUS_Z;
      } else if (f.arg == FunArg::ONE_MINUS_Z) {
        f.arg = FunArg::Z;
      }
    }
    t.normalize_factors();
  }
  return out;
}

std::string Expr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.get_str() << ")";
    if (t.binom) {
      os << "*C(" << t.binom->first << "," << t.binom->second << ")";
    }
    for (const ConstKey& c : t.consts) os << "*" << const_to_string(c);
    for (const FunFactor& f : t.funs) os << "*" << fun_to_string(f);
  }
  return os.str();
}

void OracleAudit::compare(const std::string& what, const RealBall& oracle,
                          const RealBall& v) {
  ++checks_;
  const double om = oracle.mid_double();
  const double orad = oracle.rad_double();
  const double want = std::max(1.0, std::fabs(om)) * std::pow(10.0, -digits_);
  if (!(orad <= want)) {
    failures_.push_back(what + ": oracle radius " + oracle.rad_decimal() +
                        " certifies fewer digits than required");
    return;
  }
  const double gap = std::fabs(v.mid_double() - om) + v.rad_double();
  if (!(gap <= orad * (1.0 + 1e-12) + 1e-300)) {
    failures_.push_back(what + ": value " + v.to_string() +
                        " escapes oracle " + oracle.to_string());
  }
}

void OracleAudit::check_const(const ConstKey& c, const RealBall& v) {
  if (c.index.empty() && (c.tag == ConstTag::MZV || c.tag == ConstTag::MTV)) {
    return;
  }
  if (c.tag == ConstTag::XI || c.tag == ConstTag::PSI) return;
  if (!seen_.insert(const_to_string(c)).second) return;

  const bool even = c.tag == ConstTag::MTV || c.tag == ConstTag::T_INT;
  Index full = c.index;
  if (c.tag == ConstTag::EZ_INT || c.tag == ConstTag::T_INT) {
    full = with_trailing(c.index, c.arg);
  }
  RealBall o = even ? oracle_mtv(full) : oracle_mzv(full);
  if (even) o.mul_2exp(1);
  if (oracle_too_wide(o, digits_)) {
    o = even ? oracle_mtv(full, 400000) : oracle_mzv(full, 400000);
    if (even) o.mul_2exp(1);
  }
  compare(const_to_string(c), o, v);
}

void OracleAudit::check_fun(const FunFactor& f, const Rational& z,
                            const RealBall& v) {
  if (f.kind == FunKind::LOG || f.index.empty()) return;
  Rational x = z;
  if (f.arg == FunArg::ONE_MINUS_Z) {
    x = Rational(1) - z;
  } else if (f.arg == FunArg::LEVEL2_FRAC) {
    x = (Rational(1) - z) / (Rational(1) + z);
  }
  const std::string key = fun_to_string(f) + "|z=" + z.get_str();
  if (!seen_.insert(key).second) return;
  if (f.kind == FunKind::LI) {
    compare(key, oracle_li(f.index, x), v);
  } else {
    compare(key, oracle_a(f.index, x), v);
  }
}

RealBall eval_const(const ConstKey& c, const EvalOptions& opt) {
  const mpfr_prec_t p = opt.prec;
  switch (c.tag) {
    case ConstTag::MZV:
      if (c.index.empty()) return RealBall::exact(1, p);
      return mzv(c.index, p);
    case ConstTag::MTV: {
      if (c.index.empty()) return RealBall::exact(1, p);
      RealBall v = mtv(c.index, p);
      v.mul_2exp(1);
      return v;
    }
    case ConstTag::EZ_INT:
      return ez_zeta_int(c.index, c.arg, p);
    case ConstTag::T_INT: {
      RealBall v = t_fn_int(c.index, c.arg, p);
      v.mul_2exp(1);
      return v;
    }
    case ConstTag::XI:
      if (c.index.empty()) return ez_zeta_int({}, c.arg, p);
      if (opt.xi_route == EvalOptions::XiRoute::Poset) {
        return i_one(xi_poset(c.index, c.arg), p);
      }
      return xi_int(c.index, c.arg, p);
    case ConstTag::PSI: {
      RealBall v = c.index.empty() ? t_fn_int({}, c.arg, p)
                                   : psi_int(c.index, c.arg, p);
      v.mul_2exp(1);
      return v;
    }
  }
  throw eval_error("constant tag out of range");
}

RealBall eval_fun(const FunFactor& f, const EvalOptions& opt) {
  if (!opt.z) {
    throw eval_error("expression has function factors but no evaluation point");
  }
  const Rational& z = *opt.z;
  const mpfr_prec_t p = opt.prec;
  switch (f.kind) {
    case FunKind::LOG: {
      if (f.arg == FunArg::Z) return log(RealBall::of_rational(z, p));
      if (f.arg == FunArg::ONE_MINUS_Z) {
        return log(RealBall::of_rational(Rational(1) - z, p));
      }
      throw eval_error("log factor at the level-2 argument");
    }
    case FunKind::LI: {
      if (f.arg == FunArg::LEVEL2_FRAC) {
        throw eval_error("Li factor at the level-2 argument");
      }
      const Rational x = f.arg == FunArg::Z ? z : Rational(Rational(1) - z);
      if (f.index.empty()) return RealBall::exact(1, p);
      if (all_ones(f.index)) {
        return li_ones(static_cast<int>(f.index.size()), x, p);
      }
      return li_eval(f.index, x, p);
    }
    case FunKind::A: {
      if (f.index.empty()) return RealBall::exact(1, p);
      if (f.arg == FunArg::LEVEL2_FRAC) {
        if (all_ones(f.index)) {
          return a_ones_frac(static_cast<int>(f.index.size()), z, p);
        }
        return a_eval(f.index, (Rational(1) - z) / (Rational(1) + z), p);
      }
      const Rational x = f.arg == FunArg::Z ? z : Rational(Rational(1) - z);
      return a_eval(f.index, x, p);
    }
  }
  throw eval_error("function kind out of range");
}

namespace {

RealBall const_value(const ConstKey& c, const EvalOptions& opt) {
  if (opt.memo) {
    auto it = opt.memo->consts.find(c);
    if (it != opt.memo->consts.end()) return it->second;
  }
  RealBall v = eval_const(c, opt);
  if (opt.audit) opt.audit->check_const(c, v);
  if (opt.memo) opt.memo->consts.emplace(c, v);
  return v;
}

RealBall fun_value(const FunFactor& f, const EvalOptions& opt) {
  if (opt.memo) {
    auto it = opt.memo->funs.find(f);
    if (it != opt.memo->funs.end()) return it->second;
  }
  RealBall v = eval_fun(f, opt);
  if (opt.audit && opt.z) opt.audit->check_fun(f, *opt.z, v);
  if (opt.memo) opt.memo->funs.emplace(f, v);
  return v;
}

}  // namespace

RealBall eval_term(const Term& t, const EvalOptions& opt) {
  RealBall out = RealBall::of_rational(t.coeff, opt.prec);
  if (t.binom) {
    out *= RealBall::exact(binomial(t.binom->first, t.binom->second),
                           opt.prec);
  }
  for (const ConstKey& c : t.consts) out *= const_value(c, opt);
  for (const FunFactor& f : t.funs) out *= fun_value(f, opt);
  return out;
}

RealBall eval_expr(const Expr& e, const EvalOptions& opt) {
  RealBall out = RealBall::exact(0, opt.prec);
  for (const Term& t : e.terms()) out += eval_term(t, opt);
  return out;
}

}  // namespace akzeta
