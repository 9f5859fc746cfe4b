#include <doctest.h>

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "akzeta/identities.hpp"
#include "akzeta/index.hpp"
#include "akzeta/series.hpp"
#include "akzeta/zeta_values.hpp"

using namespace akzeta;

namespace {

// ({1}^{a-1}, b+1), the index of one block.
Index block_index(int a, int b) {
  Index k(static_cast<size_t>(a - 1), 1);
  k.push_back(b + 1);
  return k;
}

RealBall pi_power_over(unsigned long n, long denom, mpfr_prec_t prec) {
  return pow_ui(RealBall::pi(prec), n) / RealBall::exact(denom, prec);
}

std::vector<Rational> small_grid() {
  return {Rational(1, 10), Rational(1, 2), Rational(7, 10)};
}

}  // namespace

TEST_CASE("canonicalization merges matching terms") {
  Term t1;
  t1.coeff = Rational(2, 3);
  t1.consts = {ConstKey{ConstTag::MZV, {2}, 0}, ConstKey{ConstTag::MZV, {3}, 0}};
  Term t2;
  t2.coeff = Rational(1, 3);
  t2.consts = {ConstKey{ConstTag::MZV, {3}, 0}, ConstKey{ConstTag::MZV, {2}, 0}};

  Expr e;
  e.add_term(t1);
  e.add_term(t2);
  Expr c = e.canonical();
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms()[0].coeff == Rational(1));

  Term t3 = t1;
  t3.coeff = -t1.coeff - t2.coeff;
  Expr f;
  f.add_term(t1);
  f.add_term(t2);
  f.add_term(t3);
  CHECK(f.canonical().empty());

  Term zero;
  zero.coeff = 0;
  Expr g;
  g.add_term(zero);
  CHECK(g.empty());
}

TEST_CASE("swapping the argument twice is the identity") {
  Identity id = li_reflection({1, 2});
  CHECK(id.rhs.swapped_z().swapped_z() == id.rhs);
  CHECK_FALSE(id.rhs.swapped_z() == id.rhs);
}

TEST_CASE("term weight counts indices and binomial depth only") {
  Term t;
  t.consts = {ConstKey{ConstTag::MZV, {2, 1}, 0},
              ConstKey{ConstTag::XI, {2}, 5}};
  t.funs = {FunFactor{FunKind::LI, {1, 2}, FunArg::Z},
            FunFactor{FunKind::LOG, {}, FunArg::Z}};
  t.binom = std::make_pair(7, 2);
  // 3 (mzv) + 2 (xi index, trailing argument excluded) + 3 (li) + 2 (binom).
  CHECK(term_weight(t) == 10);
}

TEST_CASE("depth-one reflection shapes") {
  SUBCASE("a single 1 reflects to itself") {
    Identity id = li_reflection({1});
    CHECK(id.lhs == id.rhs);
    CHECK(id.rhs.canonical().terms().size() == 1);
  }
  SUBCASE("weight two is the classical two-term reflection") {
    Identity id = li_reflection({2});
    Expr want;
    Term c;
    c.consts = {ConstKey{ConstTag::MZV, {2}, 0}};
    want.add_term(c);
    Term f1;
    f1.coeff = -1;
    f1.funs = {FunFactor{FunKind::LI, {1}, FunArg::ONE_MINUS_Z},
               FunFactor{FunKind::LI, {1}, FunArg::Z}};
    want.add_term(f1);
    Term f2;
    f2.coeff = -1;
    f2.funs = {FunFactor{FunKind::LI, {2}, FunArg::Z}};
    want.add_term(f2);
    CHECK(id.rhs == want);
  }
}

TEST_CASE("weight-two reflection matches an independent closed form") {
  const mpfr_prec_t prec = 128;
  Identity id = li_reflection({2});
  VerifyOptions opt;
  opt.zs = small_grid();
  opt.tol = 1e-25;
  CHECK(verify(id, opt).pass);

  // Same statement assembled from logs and the MPFR zeta, sharing no code
  // with the expression evaluator.
  for (const Rational& z : small_grid()) {
    RealBall bz = RealBall::of_rational(z, prec);
    RealBall b1z = RealBall::of_rational(Rational(1) - z, prec);
    RealBall lhs = li_eval({2}, Rational(1) - z, prec);
    RealBall rhs = RealBall::riemann_zeta(2, prec) - log(bz) * log(b1z) -
                   li_eval({2}, z, prec);
    CHECK((lhs - rhs).dev_within(1e-25));
  }
}

TEST_CASE("depth-one statement agrees with the general reflection") {
  VerifyOptions opt;
  opt.zs = small_grid();
  CHECK(verify(li_reflection_depth1(3), opt).pass);
  CHECK(verify(li_reflection({1, 2}), opt).pass);

  // Two different expansions of Li(2; 1-z) must meet numerically.
  Identity a = li_reflection_depth1(2);
  Identity b = li_reflection({2});
  CHECK(a.lhs == b.lhs);
  EvalOptions eo;
  eo.z = Rational(3, 10);
  CHECK((eval_expr(a.rhs, eo) - eval_expr(b.rhs, eo)).dev_within(1e-25));
}

TEST_CASE("block reflection is the swapped single-block reflection") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      Identity gen = li_reflection(block_index(a, b));
      Identity blk = li_reflection_block(a, b);
      CHECK(gen.lhs.swapped_z() == blk.lhs);
      CHECK(gen.rhs.swapped_z() == blk.rhs);
    }
  }
}

TEST_CASE("xi expansion of a single 1 collapses to one term") {
  for (int m = 1; m <= 3; ++m) {
    Identity id = xi_zeta_expansion({1}, m);
    Expr c = id.rhs.canonical();
    REQUIRE(c.terms().size() == 1);
    const Term& t = c.terms()[0];
    CHECK(t.coeff == Rational(1));
    REQUIRE(t.binom.has_value());
    CHECK(*t.binom == std::make_pair(m + 1, 1));
    REQUIRE(t.consts.size() == 1);
    CHECK(t.consts[0] == (ConstKey{ConstTag::EZ_INT, {}, m + 2}));
    CHECK(verify(id, VerifyOptions{}).pass);
  }
}

TEST_CASE("xi closed forms against powers of pi") {
  const mpfr_prec_t prec = 128;
  EvalOptions eo;
  RealBall pi4_72 = pi_power_over(4, 72, prec);

  Identity exp21 = xi_zeta_expansion({2}, 1);
  CHECK((eval_expr(exp21.lhs, eo) - pi4_72).dev_within(1e-25));
  CHECK((eval_expr(exp21.rhs, eo) - pi4_72).dev_within(1e-25));

  Identity blk = xi_zeta_expansion_block(1, 1, 1);
  CHECK((eval_expr(blk.lhs, eo) - pi4_72).dev_within(1e-25));
  CHECK((eval_expr(blk.rhs, eo) - pi4_72).dev_within(1e-25));

  // Doubling xi((2); 2) gives zeta(2)^2.
  Identity dual = xi_duality({2}, 1);
  RealBall pi4_36 = pi_power_over(4, 36, prec);
  CHECK((eval_expr(dual.lhs, eo) - pi4_36).dev_within(1e-25));
  CHECK((eval_expr(dual.rhs, eo) - pi4_36).dev_within(1e-25));
}

TEST_CASE("duality of a single 1 is vacuous") {
  Identity id = xi_duality({1}, 1);
  CHECK(id.lhs.canonical().empty());
  CHECK(id.rhs.canonical().empty());
  VerificationReport rep = verify(id, VerifyOptions{});
  CHECK(rep.pass);
  CHECK(rep.max_dev == 0.0);
}

TEST_CASE("block duality agrees with the general duality numerically") {
  EvalMemo memo;
  EvalOptions eo;
  eo.memo = &memo;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int m = 1; m <= 2; ++m) {
        Identity gen = xi_duality(block_index(a, b), m);
        Identity blk = xi_duality_block(a, b, m);
        CHECK((eval_expr(gen.lhs, eo) - eval_expr(blk.lhs, eo))
                  .dev_within(1e-25));
        CHECK((eval_expr(gen.rhs, eo) - eval_expr(blk.rhs, eo))
                  .dev_within(1e-25));
      }
    }
  }
}

TEST_CASE("multi-block duality with one block matches the block statement") {
  for (int a = 1; a <= 2; ++a) {
    for (int m = 1; m <= 2; ++m) {
      for (int kk = 2; kk <= 4; ++kk) {
        Identity multi = xi_duality_multi(a, m, {kk}, SignReading::AsPrinted);
        Identity blk = xi_duality_block(a, kk - 2, m);
        CHECK(multi.lhs == blk.lhs);
        CHECK(multi.rhs == blk.rhs);
      }
    }
  }
}

TEST_CASE("multi-block duality adjudication records the passing reading") {
  VerifyOptions opt;
  SUBCASE("one block passes as printed") {
    VerificationReport rep = verify_xi_duality_multi(2, 2, {3}, opt);
    CHECK(rep.pass);
    CHECK(rep.params_json.find("as-printed") != std::string::npos);
  }
  SUBCASE("two blocks need the corrected correction sum") {
    VerificationReport rep = verify_xi_duality_multi(1, 1, {2, 3}, opt);
    CHECK(rep.pass);
    CHECK(rep.params_json.find("corrected") != std::string::npos);
    CHECK_FALSE(rep.note.empty());
  }
  SUBCASE("a deeper leading block makes the printed form divergent") {
    CHECK_THROWS_AS(xi_duality_multi(2, 1, {2, 2}, SignReading::AsPrinted),
                    identity_error);
    VerificationReport rep = verify_xi_duality_multi(2, 1, {2, 2}, opt);
    CHECK(rep.pass);
    CHECK(rep.params_json.find("corrected") != std::string::npos);
  }
}

TEST_CASE("poset route reproduces the sum route for xi") {
  const std::vector<Index> ks = {{2}, {1, 2}, {2, 1}, {1, 1, 2}};
  EvalOptions sum_opt;
  EvalOptions poset_opt;
  poset_opt.xi_route = EvalOptions::XiRoute::Poset;
  for (const Index& k : ks) {
    for (int m = 1; m <= 2; ++m) {
      ConstKey key{ConstTag::XI, k, m + 1};
      RealBall a = eval_const(key, sum_opt);
      RealBall b = eval_const(key, poset_opt);
      CHECK((a - b).dev_within(1e-30));
    }
  }
}

TEST_CASE("level-two duality closed case") {
  const mpfr_prec_t prec = 128;
  RealBall pi2_8 = pi_power_over(2, 8, prec);
  CHECK((psi_int({2}, 2, prec) - pi2_8 * pi2_8).dev_within(1e-25));

  Identity id = psi_duality({2}, 1);
  EvalOptions eo;
  RealBall pi4_16 = pi_power_over(4, 16, prec);
  CHECK((eval_expr(id.lhs, eo) - pi4_16).dev_within(1e-25));
  CHECK((eval_expr(id.rhs, eo) - pi4_16).dev_within(1e-25));
  CHECK(verify(id, VerifyOptions{}).pass);
}

TEST_CASE("level-two expansion of a single 1 collapses to one term") {
  for (int m = 1; m <= 2; ++m) {
    Identity id = psi_t_expansion({1}, m);
    Expr c = id.rhs.canonical();
    REQUIRE(c.terms().size() == 1);
    REQUIRE(c.terms()[0].consts.size() == 1);
    CHECK(c.terms()[0].consts[0] == (ConstKey{ConstTag::T_INT, {}, m + 2}));
    CHECK(verify(id, VerifyOptions{}).pass);
  }
}

TEST_CASE("level-two reflection at depth one is trivial") {
  Identity id = a_reflection({1});
  CHECK(id.lhs == id.rhs);
  VerifyOptions opt;
  opt.zs = small_grid();
  CHECK(verify(id, opt).pass);
  CHECK(verify(a_reflection({2}), opt).pass);
}

TEST_CASE("verification reports serialize and fail loudly") {
  Identity id = xi_duality({2}, 1);
  VerifyOptions opt;
  VerificationReport rep = verify(id, opt);
  CHECK(rep.pass);
  nlohmann::json j = nlohmann::json::parse(rep.to_json());
  CHECK(j["identity"] == "xi-duality");
  CHECK(j["pass"] == true);
  CHECK(j["points"].size() == 1);
  CHECK(j["params"]["k"] == nlohmann::json::array({2}));

  SUBCASE("a deliberate shift of the right side is caught") {
    VerifyOptions bad = opt;
    bad.rhs_shift = 1e-10;
    VerificationReport r2 = verify(id, bad);
    CHECK_FALSE(r2.pass);
    CHECK(r2.max_dev >= 1e-11);
  }
  SUBCASE("functional identities require a grid") {
    VerificationReport r3 = verify(li_reflection({2}), VerifyOptions{});
    CHECK_FALSE(r3.pass);
    CHECK(r3.note.find("z grid") != std::string::npos);
  }
  SUBCASE("grid points must stay away from the endpoints") {
    VerifyOptions bad = opt;
    bad.zs = {Rational(99, 100)};
    VerificationReport r4 = verify(li_reflection({2}), bad);
    CHECK_FALSE(r4.pass);
    CHECK(r4.note.find("0.95") != std::string::npos);
  }
}

TEST_CASE("evaluation is deterministic and audited") {
  Identity id = li_reflection({1, 2});
  OracleAudit audit(6.0);
  EvalOptions eo;
  eo.z = Rational(1, 2);
  eo.audit = &audit;
  RealBall v1 = eval_expr(id.rhs, eo);
  CHECK(audit.checks() > 0);
  CHECK(audit.clean());
  RealBall v2 = eval_expr(id.rhs, eo);
  CHECK(v1.mid_decimal(30) == v2.mid_decimal(30));
  CHECK((eval_expr(id.lhs, eo) - v1).dev_within(1e-20));
}

TEST_CASE("builders reject out-of-domain parameters") {
  CHECK_THROWS_AS(li_reflection({}), identity_error);
  CHECK_THROWS_AS(li_reflection({0, 2}), identity_error);
  CHECK_THROWS_AS(xi_zeta_expansion({2}, 0), identity_error);
  CHECK_THROWS_AS(li_reflection_depth1(1), identity_error);
  CHECK_THROWS_AS(li_reflection_block(0, 0), identity_error);
  CHECK_THROWS_AS(xi_duality_multi(1, 1, {2, 1}, SignReading::Corrected),
                  identity_error);
  CHECK_THROWS_AS(xi_duality_multi(0, 1, {2}, SignReading::Corrected),
                  identity_error);

  CHECK(li_reflection({2}).functional);
  CHECK_FALSE(xi_duality({2}, 1).functional);
}
