#include "akzeta/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <utility>

#include <json.hpp>

#include "akzeta/checks.hpp"
#include "akzeta/identities.hpp"
#include "akzeta/index.hpp"
#include "akzeta/poset.hpp"
#include "akzeta/word.hpp"
#include "akzeta/zeta_values.hpp"

namespace akzeta {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

std::vector<Index> positive_indices_up_to(long max_weight) {
  std::vector<Index> out;
  for (long w = 1; w <= max_weight; ++w) {
    for (long d = 1; d <= w; ++d) {
      for (const NonNegIndex& e :
           compositions(static_cast<int>(w - d), static_cast<int>(d))) {
        Index k(e.begin(), e.end());
        for (int& v : k) ++v;
        out.push_back(std::move(k));
      }
    }
  }
  return out;
}

std::vector<Index> admissible_indices_up_to(long max_weight) {
  std::vector<Index> out;
  for (Index& k : positive_indices_up_to(max_weight)) {
    if (is_admissible(k)) out.push_back(std::move(k));
  }
  return out;
}

CheckResult run_check(const char* name,
                      const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.pass = true;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& ex) {
    r.pass = false;
    r.note = ex.what();
  }
  r.ms = elapsed_ms(t0);
  return r;
}

void record_exact(CheckResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok && r.pass) {
    r.pass = false;
    r.note = what;
  }
}

void record_dev(CheckResult& r, const RealBall& diff, double tol,
                const std::string& what) {
  ++r.cases;
  const double dev = std::fabs(diff.mid_double());
  if (dev > r.max_dev) r.max_dev = dev;
  if (!diff.dev_within(tol) && r.pass) {
    r.pass = false;
    r.note = what;
  }
}

void record_report(CheckResult& r, const VerificationReport& rep) {
  ++r.cases;
  if (rep.max_dev > r.max_dev) r.max_dev = rep.max_dev;
  if (!rep.pass && r.pass) {
    r.pass = false;
    r.note = rep.summary();
  }
}

VerifyOptions sweep_options(const SuiteOptions& opt, double tol,
                            OracleAudit* audit) {
  VerifyOptions vo;
  vo.tol = tol;
  vo.prec = opt.prec;
  vo.zs = opt.z_grid;
  vo.audit = audit;
  return vo;
}

std::string reading_of(const std::string& params_json) {
  return nlohmann::json::parse(params_json)
      .value("reading", std::string("?"));
}

CheckResult audit_result(const OracleAudit& audit) {
  CheckResult r;
  r.name = "oracle-audit";
  r.cases = audit.checks();
  r.pass = audit.clean() && audit.checks() > 0;
  if (!audit.clean()) {
    r.note = audit.failures().front();
  } else if (audit.checks() == 0) {
    r.note = "no audited evaluations";
  }
  return r;
}

void add_check(SuiteResult& res, const SuiteOptions& opt, CheckResult c) {
  if (opt.log) opt.log(c.line());
  res.checks.push_back(std::move(c));
}

void finalize(SuiteResult& res, Clock::time_point t0) {
  res.pass = true;
  for (const CheckResult& c : res.checks) res.pass = res.pass && c.pass;
  res.ms = elapsed_ms(t0);
}

}  // namespace

std::vector<Rational> default_z_grid() {
  return {Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10),
          Rational(9, 10)};
}

std::string CheckResult::line() const {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%-26s %-4s  max dev %.2e  %5zu cases  %7ld ms", name.c_str(),
                pass ? "pass" : "FAIL", max_dev, cases, ms);
  std::string out = buf;
  if (!note.empty()) {
    out += "  ";
    out += note;
  }
  return out;
}

std::string SuiteResult::table() const {
  std::string out = "suite " + suite + ": " + (pass ? "pass" : "FAIL") + " (" +
                    std::to_string(ms) + " ms)\n";
  for (const CheckResult& c : checks) {
    out += "  ";
    out += c.line();
    out += "\n";
  }
  return out;
}

CheckResult check_involutions(const SuiteOptions& opt) {
  return run_check("involutions", [&](CheckResult& r) {
    for (const Index& k : positive_indices_up_to(opt.max_weight)) {
      record_exact(r, hoffman_dual(hoffman_dual(k)) == k,
                   "hoffman dual not involutive at " + index_to_string(k));
      const Index via = reverse_blocks(k_minus(dual(e_plus(k))));
      record_exact(r, hoffman_dual(k) == via,
                   "hoffman dual differs from its block route at " +
                       index_to_string(k));
      if (is_admissible(k)) {
        record_exact(r, dual(dual(k)) == k,
                     "dual not involutive at " + index_to_string(k));
      }
    }
  });
}

CheckResult check_composition_counts(const SuiteOptions& opt) {
  (void)opt;
  return run_check("composition-counts", [&](CheckResult& r) {
    for (int d = 1; d <= 6; ++d) {
      for (int w = 0; w <= 8; ++w) {
        const Integer count(static_cast<unsigned long>(compositions(w, d).size()));
        record_exact(r, count == binomial(w + d - 1, d - 1),
                     "composition count off at w=" + std::to_string(w) +
                         " d=" + std::to_string(d));
      }
    }
    record_exact(r, compositions(0, 0).size() == 1,
                 "compositions(0,0) should be {()}");
    record_exact(r, compositions(3, 0).empty(),
                 "compositions(3,0) should be empty");
  });
}

CheckResult check_wmap_extensions(const SuiteOptions& opt) {
  (void)opt;
  return run_check("wmap-extensions", [&](CheckResult& r) {
    std::mt19937 rng(91152023u);
    std::uniform_int_distribution<int> size_dist(1, 8);
    std::bernoulli_distribution edge(0.3);
    std::bernoulli_distribution lab(0.5);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = size_dist(rng);
      std::vector<int> labels(static_cast<size_t>(n));
      std::vector<std::pair<int, int>> covers;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (edge(rng)) covers.emplace_back(i, j);
        }
      }
      for (int& l : labels) l = lab(rng) ? 1 : 0;
      const TwoPoset x(labels, covers);
      record_exact(r, w_map(x) == w_map_by_extensions(x),
                   "w map recursion mismatch on " + x.to_json());
    }
  });
}

CheckResult check_poset_duality(const SuiteOptions& opt) {
  (void)opt;
  return run_check("poset-duality", [&](CheckResult& r) {
    auto check_one = [&](const TwoPoset& x) {
      const WordSum img = w_map(x);
      WordSum dualized;
      for (const auto& [w, c] : img.terms()) {
        dualized.add_term(word_dual(w), c);
      }
      record_exact(r, dualized == w_map(transpose(x)),
                   "transpose does not dualize " + x.to_json());
    };

    for (const Index& k : admissible_indices_up_to(5)) {
      check_one(chain_from_index(k));
    }
    for (const Index& k : positive_indices_up_to(3)) {
      for (int m = 1; m <= 2; ++m) check_one(xi_poset(k, m));
    }

    std::mt19937 rng(47102261u);
    std::uniform_int_distribution<int> size_dist(1, 8);
    std::bernoulli_distribution edge(0.3);
    std::bernoulli_distribution lab(0.5);
    std::size_t random_admissible = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = size_dist(rng);
      std::vector<int> labels(static_cast<size_t>(n));
      std::vector<std::pair<int, int>> covers;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (edge(rng)) covers.emplace_back(i, j);
        }
      }
      // Minimal elements become bullets and maximal ones circles so that a
      // decent share of the samples is admissible.
      const TwoPoset shape(std::vector<int>(static_cast<size_t>(n), 1),
                           covers);
      for (int v = 0; v < n; ++v) {
        bool minimal = true;
        bool maximal = true;
        for (int u = 0; u < n; ++u) {
          if (u == v) continue;
          if (shape.less(static_cast<size_t>(u), static_cast<size_t>(v))) {
            minimal = false;
          }
          if (shape.less(static_cast<size_t>(v), static_cast<size_t>(u))) {
            maximal = false;
          }
        }
        if (minimal) {
          labels[static_cast<size_t>(v)] = 1;
        } else if (maximal) {
          labels[static_cast<size_t>(v)] = 0;
        } else {
          labels[static_cast<size_t>(v)] = lab(rng) ? 1 : 0;
        }
      }
      const TwoPoset x(labels, covers);
      if (!is_admissible_poset(x)) continue;
      ++random_admissible;
      check_one(x);
    }
    record_exact(r, random_admissible >= 40,
                 "too few admissible random samples");
  });
}

CheckResult check_chain_rewriting(const SuiteOptions& opt) {
  (void)opt;
  return run_check("chain-rewriting", [&](CheckResult& r) {
    const std::vector<Index> pool = positive_indices_up_to(3);
    for (const Index& k : pool) {
      for (const Index& l : pool) {
        for (int count = 0; count <= 2; ++count) {
          record_exact(r, idou_rewrite_check(k, l, count, IdouVariant::Circle),
                       "circle rewriting fails at k=" + index_to_string(k) +
                           " l=" + index_to_string(l) +
                           " count=" + std::to_string(count));
          record_exact(r, idou_rewrite_check(k, l, count, IdouVariant::Bullet),
                       "bullet rewriting fails at k=" + index_to_string(k) +
                           " l=" + index_to_string(l) +
                           " count=" + std::to_string(count));
        }
      }
    }
  });
}

CheckResult check_xi_poset_route(const SuiteOptions& opt) {
  return run_check("xi-poset-route", [&](CheckResult& r) {
    for (const Index& k : positive_indices_up_to(std::min<long>(4, opt.max_weight))) {
      for (int m = 1; m <= 3; ++m) {
        const RealBall got = i_one(xi_poset(k, m), opt.prec);
        const RealBall want = xi_int(k, m, opt.prec);
        record_dev(r, got - want, 0.0,
                   "poset route off at k=" + index_to_string(k) +
                       " m=" + std::to_string(m));
      }
    }
  });
}

CheckResult check_holder_preflight(const SuiteOptions& opt) {
  (void)opt;
  return run_check("holder-preflight", [&](CheckResult& r) {
    record_exact(r, mzv_route_check(5),
                 "mzv split route rejected; direct summation engaged");
    record_exact(r, mtv_route_check(5),
                 "mtv split route rejected; direct summation engaged");
  });
}

CheckResult check_zeta_duality(const SuiteOptions& opt) {
  return run_check("zeta-duality", [&](CheckResult& r) {
    for (const Index& k : admissible_indices_up_to(opt.max_weight)) {
      const RealBall diff = mzv(k, opt.prec) - mzv(dual(k), opt.prec);
      record_dev(r, diff, 1e-25, "zeta duality off at " + index_to_string(k));
    }
  });
}

CheckResult check_t_duality(const SuiteOptions& opt) {
  return run_check("t-duality", [&](CheckResult& r) {
    for (const Index& k :
         admissible_indices_up_to(std::min<long>(6, opt.max_weight))) {
      const RealBall diff = mtv(k, opt.prec) - mtv(dual(k), opt.prec);
      record_dev(r, diff, 1e-10, "t duality off at " + index_to_string(k));
    }
  });
}

CheckResult check_xi_closed_forms(const SuiteOptions& opt) {
  return run_check("xi-closed-forms", [&](CheckResult& r) {
    for (int m = 1; m <= 5; ++m) {
      const RealBall got = xi_int({1}, m + 1, opt.prec);
      const RealBall want =
          RealBall::exact(m + 1, opt.prec) * mzv({m + 2}, opt.prec);
      record_dev(r, got - want, 1e-25,
                 "xi((1);" + std::to_string(m + 1) + ") vs (m+1) zeta(m+2)");
    }
    const RealBall pi4 = pow_ui(RealBall::pi(opt.prec), 4);
    record_dev(r,
               xi_int({2}, 2, opt.prec) - pi4 / RealBall::exact(72, opt.prec),
               1e-25, "xi((2);2) vs pi^4/72");
  });
}

CheckResult check_li_reflection_sweep(const SuiteOptions& opt,
                                      OracleAudit* audit) {
  return run_check("li-reflection-sweep", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    for (const Index& k : positive_indices_up_to(opt.max_weight)) {
      record_report(r, verify(li_reflection(k), vo));
    }
  });
}

CheckResult check_xi_expansion_sweep(const SuiteOptions& opt,
                                     OracleAudit* audit) {
  return run_check("xi-expansion-sweep", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    for (const Index& k : positive_indices_up_to(opt.max_weight)) {
      for (int m = 1; m <= 3; ++m) {
        record_report(r, verify(xi_zeta_expansion(k, m), vo));
      }
    }
  });
}

CheckResult check_xi_duality_sweep(const SuiteOptions& opt,
                                   OracleAudit* audit) {
  return run_check("xi-duality-sweep", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    for (const Index& k : positive_indices_up_to(opt.max_weight)) {
      for (int m = 1; m <= 2; ++m) {
        record_report(r, verify(xi_duality(k, m), vo));
      }
    }
    const RealBall closed =
        RealBall::exact(2, opt.prec) * xi_int({2}, 2, opt.prec) -
        mzv({2}, opt.prec) * mzv({2}, opt.prec);
    record_dev(r, closed, 1e-25, "2 xi((2);2) vs zeta(2)^2");
  });
}

CheckResult check_expansion_blocks(const SuiteOptions& opt,
                                   OracleAudit* audit) {
  return run_check("expansion-blocks", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        for (int m = 1; m <= 3; ++m) {
          record_report(r, verify(xi_zeta_expansion_block(a, b, m), vo));
        }
      }
    }
  });
}

CheckResult check_duality_blocks(const SuiteOptions& opt, OracleAudit* audit) {
  return run_check("duality-blocks", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        for (int m = 1; m <= 3; ++m) {
          record_report(r, verify(xi_duality_block(a, b, m), vo));
        }
      }
    }
  });
}

CheckResult check_depth1_reflection(const SuiteOptions& opt,
                                    OracleAudit* audit) {
  return run_check("depth1-reflection", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    for (int kk = 2; kk <= 5; ++kk) {
      record_report(r, verify(li_reflection_depth1(kk), vo));
    }
  });
}

CheckResult check_block_reflection_match(const SuiteOptions& opt) {
  (void)opt;
  return run_check("block-reflection-match", [&](CheckResult& r) {
    for (int a = 1; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        Index k(static_cast<size_t>(a - 1), 1);
        k.push_back(b + 1);
        const Identity gen = li_reflection(k);
        const Identity blk = li_reflection_block(a, b);
        record_exact(r,
                     gen.lhs.swapped_z() == blk.lhs &&
                         gen.rhs.swapped_z() == blk.rhs,
                     "block reflection differs at a=" + std::to_string(a) +
                         " b=" + std::to_string(b));
      }
    }
  });
}

CheckResult check_multi_block_duality(const SuiteOptions& opt,
                                      OracleAudit* audit) {
  return run_check("multi-block-duality", [&](CheckResult& r) {
    VerifyOptions vo = sweep_options(opt, 1e-20, audit);
    std::map<std::string, std::size_t> readings;
    auto run_one = [&](int a, int m, const Index& ks) {
      const VerificationReport rep = verify_xi_duality_multi(a, m, ks, vo);
      if (rep.pass) ++readings[reading_of(rep.params_json)];
      record_report(r, rep);
    };
    for (int a = 1; a <= 3; ++a) {
      for (int m = 1; m <= 3; ++m) {
        for (int k1 = 2; k1 <= 3; ++k1) {
          run_one(a, m, {k1});
          for (int k2 = 2; k2 <= 3; ++k2) run_one(a, m, {k1, k2});
        }
      }
    }
    if (r.pass) {
      std::string s = "recorded readings:";
      for (const auto& [name, count] : readings) {
        s += " " + name + " x" + std::to_string(count);
      }
      r.note = s;
    }
  });
}

CheckResult check_a_reflection_sweep(const SuiteOptions& opt,
                                     OracleAudit* audit) {
  return run_check("a-reflection-sweep", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-10, audit);
    for (const Index& k :
         positive_indices_up_to(std::min<long>(4, opt.max_weight))) {
      record_report(r, verify(a_reflection(k), vo));
    }
  });
}

CheckResult check_psi_expansion_sweep(const SuiteOptions& opt,
                                      OracleAudit* audit) {
  return run_check("psi-expansion-sweep", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-10, audit);
    for (const Index& k :
         positive_indices_up_to(std::min<long>(4, opt.max_weight))) {
      for (int m = 1; m <= 2; ++m) {
        record_report(r, verify(psi_t_expansion(k, m), vo));
      }
    }
  });
}

CheckResult check_psi_duality_sweep(const SuiteOptions& opt,
                                    OracleAudit* audit) {
  return run_check("psi-duality-sweep", [&](CheckResult& r) {
    const VerifyOptions vo = sweep_options(opt, 1e-10, audit);
    for (const Index& k :
         positive_indices_up_to(std::min<long>(4, opt.max_weight))) {
      for (int m = 1; m <= 2; ++m) {
        record_report(r, verify(psi_duality(k, m), vo));
      }
    }
    const RealBall pi2_8 =
        pow_ui(RealBall::pi(opt.prec), 2) / RealBall::exact(8, opt.prec);
    record_dev(r, psi_int({2}, 2, opt.prec) - pi2_8 * pi2_8, 1e-10,
               "psi((2);2) vs (pi^2/8)^2");
  });
}

CheckResult check_derivative_recurrences(const SuiteOptions& opt,
                                         bool level2) {
  const char* name =
      level2 ? "a-derivative-recurrence" : "li-derivative-recurrence";
  return run_check(name, [&](CheckResult& r) {
    const DerivKind kind = level2 ? DerivKind::A : DerivKind::LI;
    const std::vector<Rational> zs = {Rational(3, 10), Rational(1, 2),
                                      Rational(7, 10)};
    for (const Index& k :
         positive_indices_up_to(std::min<long>(4, opt.max_weight))) {
      for (const Rational& z : zs) {
        record_exact(r, derivative_check(kind, k, z, 256, 1e-15),
                     "derivative recurrence off at " + index_to_string(k));
      }
    }
  });
}

CheckResult check_limit_lemma(const SuiteOptions& opt) {
  return run_check("limit-lemma", [&](CheckResult& r) {
    for (const Index& l : std::vector<Index>{{2}, {3}, {1, 2}}) {
      for (int a = 1; a <= 3; ++a) {
        std::vector<double> devs;
        const bool ok = limit_lemma_check(l, a, opt.prec, 1e-3, &devs);
        ++r.cases;
        if (!devs.empty() && devs.back() > r.max_dev) r.max_dev = devs.back();
        if (!ok && r.pass) {
          r.pass = false;
          r.note = "limit combination does not settle at l=" +
                   index_to_string(l) + " a=" + std::to_string(a);
        }
      }
    }
  });
}

SuiteResult run_combinatorics_suite(const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  SuiteResult res;
  res.suite = "combinatorics";
  add_check(res, opt, check_involutions(opt));
  add_check(res, opt, check_composition_counts(opt));
  finalize(res, t0);
  return res;
}

SuiteResult run_posets_suite(const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  SuiteResult res;
  res.suite = "posets";
  add_check(res, opt, check_holder_preflight(opt));
  if (!res.checks.back().pass) {
    res.checks.back().note += "; remaining checks skipped";
    finalize(res, t0);
    return res;
  }
  add_check(res, opt, check_wmap_extensions(opt));
  add_check(res, opt, check_poset_duality(opt));
  add_check(res, opt, check_chain_rewriting(opt));
  add_check(res, opt, check_xi_poset_route(opt));
  finalize(res, t0);
  return res;
}

SuiteResult run_level1_suite(const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  SuiteResult res;
  res.suite = "level1";
  add_check(res, opt, check_holder_preflight(opt));
  if (!res.checks.back().pass) {
    res.checks.back().note += "; remaining checks skipped";
    finalize(res, t0);
    return res;
  }
  OracleAudit audit;
  OracleAudit* ap = opt.oracle_audit ? &audit : nullptr;
  add_check(res, opt, check_zeta_duality(opt));
  add_check(res, opt, check_xi_closed_forms(opt));
  add_check(res, opt, check_li_reflection_sweep(opt, ap));
  add_check(res, opt, check_xi_expansion_sweep(opt, ap));
  add_check(res, opt, check_xi_duality_sweep(opt, ap));
  add_check(res, opt, check_expansion_blocks(opt, ap));
  add_check(res, opt, check_duality_blocks(opt, ap));
  add_check(res, opt, check_depth1_reflection(opt, ap));
  add_check(res, opt, check_block_reflection_match(opt));
  add_check(res, opt, check_multi_block_duality(opt, ap));
  add_check(res, opt, check_derivative_recurrences(opt, false));
  add_check(res, opt, check_limit_lemma(opt));
  if (ap) add_check(res, opt, audit_result(audit));
  finalize(res, t0);
  return res;
}

SuiteResult run_level2_suite(const SuiteOptions& opt) {
  const auto t0 = Clock::now();
  SuiteResult res;
  res.suite = "level2";
  add_check(res, opt, check_holder_preflight(opt));
  if (!res.checks.back().pass) {
    res.checks.back().note += "; remaining checks skipped";
    finalize(res, t0);
    return res;
  }
  OracleAudit audit;
  OracleAudit* ap = opt.oracle_audit ? &audit : nullptr;
  add_check(res, opt, check_t_duality(opt));
  add_check(res, opt, check_a_reflection_sweep(opt, ap));
  add_check(res, opt, check_psi_expansion_sweep(opt, ap));
  add_check(res, opt, check_psi_duality_sweep(opt, ap));
  add_check(res, opt, check_derivative_recurrences(opt, true));
  if (ap) add_check(res, opt, audit_result(audit));
  finalize(res, t0);
  return res;
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  std::vector<SuiteResult> out;
  out.push_back(run_combinatorics_suite(opt));
  out.push_back(run_posets_suite(opt));
  out.push_back(run_level1_suite(opt));
  out.push_back(run_level2_suite(opt));
  return out;
}

}  // namespace akzeta
