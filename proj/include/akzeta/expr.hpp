#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "akzeta/ball.hpp"
#include "akzeta/cache.hpp"
#include "akzeta/index.hpp"
#include "akzeta/rational.hpp"

namespace akzeta {

// Symbolic linear combinations of products of zeta-type constants and
// polylogarithm-type function factors, exactly the shape both sides of the
// verified identities take: each term is
//
//   coeff * C(n, d) * prod(consts) * prod(funs)
//
// with an exact rational coefficient, an optional instantiated binomial,
// constants drawn from the cache key vocabulary (MZV, MTV, zeta/T with a
// trailing integer argument, xi, psi), and function factors Li/A/log taken
// at one of three tagged arguments. Terms stay symbolic until eval_expr.

enum class FunKind { LI, A, LOG };
enum class FunArg { Z, ONE_MINUS_Z, LEVEL2_FRAC };

const char* fun_kind_name(FunKind k);
const char* fun_arg_name(FunArg a);

// One function factor. index is ignored for LOG. LEVEL2_FRAC stands for the
// argument (1-z)/(1+z) and is only meaningful with kind A.
struct FunFactor {
  FunKind kind = FunKind::LI;
  Index index;
  FunArg arg = FunArg::Z;
  friend auto operator<=>(const FunFactor&, const FunFactor&) = default;
};

struct Term {
  Rational coeff{1};
  std::vector<ConstKey> consts;
  std::vector<FunFactor> funs;
  // Instantiated binomial coefficient C(first, second), second >= 0.
  std::optional<std::pair<int, int>> binom;

  // (consts, funs, binom) with the factor lists in sorted order; terms with
  // equal keys are mergeable by coefficient addition.
  void normalize_factors();
  friend bool same_key(const Term& s, const Term& t);
  friend bool key_less(const Term& s, const Term& t);
};

// Combined index weight of a term: constants and function factors count the
// weight of their index part, an instantiated binomial counts its lower
// entry d. Trailing integer arguments of xi/psi/zeta(k;m) do not count.
long long term_weight(const Term& t);

class Expr {
 public:
  Expr() = default;

  // Appends after factor normalization; zero coefficients are dropped.
  void add_term(Term t);
  Expr& operator+=(const Expr& o);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Sorted-merged form: terms ordered by key, equal keys combined, zero
  // coefficients removed. Equality compares canonical forms, so it means
  // "identical as formal sums".
  Expr canonical() const;
  friend bool operator==(const Expr& a, const Expr& b);

  // Z and ONE_MINUS_Z swapped in every function factor; used to compare
  // identities stated at complementary arguments.
  Expr swapped_z() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

// Once-per-symbol cross-validation of evaluated constants and function
// factors against the independent direct-summation oracles. A check passes
// when the oracle interval certifies at least `digits` significant digits
// and contains the production ball. Symbols without an oracle (xi, psi,
// log) are skipped.
class OracleAudit {
 public:
  explicit OracleAudit(double digits = 6.0) : digits_(digits) {}

  void check_const(const ConstKey& c, const RealBall& v);
  void check_fun(const FunFactor& f, const Rational& z, const RealBall& v);

  size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }
  bool clean() const { return failures_.empty(); }

 private:
  void compare(const std::string& what, const RealBall& oracle,
               const RealBall& v);

  double digits_;
  size_t checks_ = 0;
  std::set<std::string> seen_;
  std::vector<std::string> failures_;
};

// Shared evaluation scratch: constants are point-independent, function
// values depend on the evaluation point, so verify keeps one const map per
// run and one fun map per point.
struct EvalMemo {
  std::map<ConstKey, RealBall> consts;
  std::map<FunFactor, RealBall> funs;
};

struct EvalOptions {
  mpfr_prec_t prec = 128;
  // Evaluation point; required as soon as the expression has function
  // factors.
  std::optional<Rational> z;
  // xi symbols normally go through the binomial-sum route; Poset routes
  // them through zeta(W(xi_poset(k, m))) instead, for cross-validation.
  enum class XiRoute { Sum, Poset } xi_route = XiRoute::Sum;
  OracleAudit* audit = nullptr;
  EvalMemo* memo = nullptr;
};

// Value of one constant symbol. Level-2 symbols are read in the 2^depth
// normalization (the one with A(k;1) = T(k)); the underlying value ops
// carry 2^{depth-1}, so every positive-weight T and psi symbol evaluates at
// twice the op value, while weight-0 constants stay 1.
RealBall eval_const(const ConstKey& c, const EvalOptions& opt);
RealBall eval_fun(const FunFactor& f, const EvalOptions& opt);
RealBall eval_term(const Term& t, const EvalOptions& opt);
RealBall eval_expr(const Expr& e, const EvalOptions& opt);

}  // namespace akzeta
