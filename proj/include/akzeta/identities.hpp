#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "akzeta/expr.hpp"
#include "akzeta/index.hpp"

namespace akzeta {

struct identity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One verifiable identity instance: two expressions claimed equal, either
// pointwise in z on (0,1) (functional = true, evaluate both sides on a
// z-grid) or as a single constant equation. Builders fully instantiate all
// summation ranges, so lhs/rhs are closed formal sums; they throw
// identity_error when a parameter choice would reference a divergent
// constant.
struct Identity {
  std::string name;
  std::string params_json;
  Expr lhs;
  Expr rhs;
  bool functional = false;
  std::string note;
};

// Reflection family: the value of the depth-dep(k) polylogarithm at the
// reflected argument expanded over products taken at z itself. Level-1
// reflection sends z to 1-z; the level-2 analogue sends z to (1-z)/(1+z).
// Requires k positive and non-empty.
Identity li_reflection(const Index& k);
Identity a_reflection(const Index& k);

// Depth-one reflection with the explicit log z term, stated for a single
// entry kk >= 2.
Identity li_reflection_depth1(int kk);

// Single-block reflection stated directly at argument z, for the index
// ({1}^{a-1}, b+1); a >= 1, b >= 0. Symbolically equal to the single-block
// case of li_reflection after swapping z and 1-z.
Identity li_reflection_block(int a, int b);

// Expansion of the shifted integrals xi(k; m+1) / psi(k; m+1) into finite
// combinations of zeta-type constants with one extra trailing argument.
// Requires k positive and non-empty, m >= 1.
Identity xi_zeta_expansion(const Index& k, int m);
Identity psi_t_expansion(const Index& k, int m);

// The same expansion restricted to one block ({1}^{a-1}, b+1), in the form
// whose correction sum runs over compositions e_1+...+e_b+d = a.
Identity xi_zeta_expansion_block(int a, int b, int m);

// Duality family: xi(k; m+1) minus a signed mirror value equals a finite
// combination of zeta products plus, for indices with several blocks, a sum
// of xi*xi corrections. psi_duality is the level-2 twin.
Identity xi_duality(const Index& k, int m);
Identity psi_duality(const Index& k, int m);

// Depth-restricted duality for one block; RHS is a pure zeta*zeta sum.
Identity xi_duality_block(int a, int b, int m);

// Multi-block duality stated through a strictly descending correction
// chain, for the index ({1}^{a-1}, k_1, ..., k_{r-1}, k_r - 1) with every
// k_i >= 2. The printed source of this identity is garbled in its
// correction sum, so three readings are implemented: AsPrinted takes the
// sign exponent to start at the j-th entry (vacuous zeroth entry) and the
// correction products exactly as typeset; ShiftedSign starts the exponent
// one entry later; Corrected starts it two entries later (matching the
// first sum) and swaps which factor of each correction product carries the
// decremented tail, which is the form implied by specializing xi_duality.
// All three coincide for r = 1.
enum class SignReading { AsPrinted, ShiftedSign, Corrected };
Identity xi_duality_multi(int a, int m, const Index& ks, SignReading reading);

struct PointReport {
  bool has_z = false;
  Rational z{0};
  std::string lhs;
  std::string rhs;
  double dev = 0.0;
  double rad = 0.0;
};

struct VerificationReport {
  std::string identity;
  std::string params_json;
  std::vector<PointReport> points;
  double max_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
  long ms = 0;
  std::string note;

  std::string to_json() const;
  std::string summary() const;
};

struct VerifyOptions {
  double tol = 1e-20;
  mpfr_prec_t prec = 128;
  // Evaluation grid for functional identities; each z must lie in
  // [0.05, 0.95]. Ignored for constant identities.
  std::vector<Rational> zs;
  EvalOptions::XiRoute xi_route = EvalOptions::XiRoute::Sum;
  OracleAudit* audit = nullptr;
  // Deliberate additive perturbation of the evaluated RHS, for exercising
  // the failure path end to end.
  double rhs_shift = 0.0;
};

// Evaluates both sides at every point and applies the containment rule
// dev <= tol + radii. Evaluation errors produce a failed report carrying
// the message in note; constants are memoized across the run, function
// values per point.
VerificationReport verify(const Identity& id, const VerifyOptions& opt);

// Runs xi_duality_multi under the as-printed reading first, then the
// shifted sign, then the corrected form; the report's params record which
// reading passed (or the as-printed failure when none does).
VerificationReport verify_xi_duality_multi(int a, int m, const Index& ks,
                                           const VerifyOptions& opt);

}  // namespace akzeta
