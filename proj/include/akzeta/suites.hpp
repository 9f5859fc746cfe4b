#pragma once

#include <functional>
#include <string>
#include <vector>

#include "akzeta/ball.hpp"
#include "akzeta/expr.hpp"
#include "akzeta/rational.hpp"

namespace akzeta {

// {1/10, 3/10, 1/2, 7/10, 9/10}: away from both endpoints, where the
// underlying series slow down.
std::vector<Rational> default_z_grid();

// One named check: a sweep over some family of instances with a single
// pass verdict, the worst deviation seen (0 for exact combinatorial
// checks), the number of instances, and a note carrying the first failure
// or an adjudication outcome.
struct CheckResult {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;
  std::size_t cases = 0;
  long ms = 0;
  std::string note;

  std::string line() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass = true;
  long ms = 0;

  std::string table() const;
};

// max_weight bounds the index sweeps; families whose acceptance domain is
// smaller (blocks, level 2, analytic checks) clamp it further. Tolerances
// are pinned inside the individual checks, not configurable: they are part
// of what each check asserts.
struct SuiteOptions {
  long max_weight = 5;
  mpfr_prec_t prec = 128;
  std::vector<Rational> z_grid = default_z_grid();
  bool oracle_audit = true;
  // Progress sink for long runs; may be empty.
  std::function<void(const std::string&)> log;
};

// Exact combinatorics.
CheckResult check_involutions(const SuiteOptions& opt);
CheckResult check_composition_counts(const SuiteOptions& opt);

// 2-poset machinery.
CheckResult check_wmap_extensions(const SuiteOptions& opt);
CheckResult check_poset_duality(const SuiteOptions& opt);
CheckResult check_chain_rewriting(const SuiteOptions& opt);
CheckResult check_xi_poset_route(const SuiteOptions& opt);

// Numerics guards. The preflight validates the split evaluation route for
// mzv and mtv against the direct-sum oracles; on failure those evaluators
// permanently fall back to direct summation for the process and any suite
// run aborts before its theorem checks.
CheckResult check_holder_preflight(const SuiteOptions& opt);

// Dualities and closed forms evaluated through the value layer.
CheckResult check_zeta_duality(const SuiteOptions& opt);
CheckResult check_t_duality(const SuiteOptions& opt);
CheckResult check_xi_closed_forms(const SuiteOptions& opt);

// Identity sweeps over every positive index of weight <= max_weight.
CheckResult check_li_reflection_sweep(const SuiteOptions& opt,
                                      OracleAudit* audit);
CheckResult check_xi_expansion_sweep(const SuiteOptions& opt,
                                     OracleAudit* audit);
CheckResult check_xi_duality_sweep(const SuiteOptions& opt,
                                   OracleAudit* audit);

// Block-shaped statements on their pinned domains (a <= 3, b <= 3, m <= 3;
// depth-one entries <= 5; multi-block r <= 2 with entries in {2, 3}).
// check_multi_block_duality adjudicates the printed/corrected readings per
// instance and records the tally in its note.
CheckResult check_expansion_blocks(const SuiteOptions& opt,
                                   OracleAudit* audit);
CheckResult check_duality_blocks(const SuiteOptions& opt, OracleAudit* audit);
CheckResult check_depth1_reflection(const SuiteOptions& opt,
                                    OracleAudit* audit);
CheckResult check_block_reflection_match(const SuiteOptions& opt);
CheckResult check_multi_block_duality(const SuiteOptions& opt,
                                      OracleAudit* audit);

// Level-2 sweeps (weight clamped to 4, tolerance 1e-10).
CheckResult check_a_reflection_sweep(const SuiteOptions& opt,
                                     OracleAudit* audit);
CheckResult check_psi_expansion_sweep(const SuiteOptions& opt,
                                      OracleAudit* audit);
CheckResult check_psi_duality_sweep(const SuiteOptions& opt,
                                    OracleAudit* audit);

// Analytic sanity: central-difference derivative recurrences at 256 bits
// and the logarithmic limit combination.
CheckResult check_derivative_recurrences(const SuiteOptions& opt, bool level2);
CheckResult check_limit_lemma(const SuiteOptions& opt);

// Suite runners. level1/level2 run the preflight first and abort on its
// failure; with oracle_audit set they thread one audit through every
// evaluation and append its verdict as a final check.
SuiteResult run_combinatorics_suite(const SuiteOptions& opt);
SuiteResult run_posets_suite(const SuiteOptions& opt);
SuiteResult run_level1_suite(const SuiteOptions& opt);
SuiteResult run_level2_suite(const SuiteOptions& opt);
std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt);

}  // namespace akzeta
