#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "akzeta/cache.hpp"
#include "akzeta/identities.hpp"
#include "akzeta/index.hpp"
#include "akzeta/poset.hpp"
#include "akzeta/series.hpp"
#include "akzeta/suites.hpp"
#include "akzeta/word.hpp"
#include "akzeta/zeta_values.hpp"

using namespace akzeta;

namespace {

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p/q", an integer, or a decimal like "0.3"; exact in every case.
Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
      const Integer num(s.substr(0, slash), 10);
      const Integer den(s.substr(slash + 1), 10);
      if (den == 0) throw usage_error("zero denominator in " + s);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Integer(s, 10));
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Integer den(1);
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    Rational q(Integer(digits, 10), den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw usage_error("cannot parse '" + s + "' as a rational");
  }
}

std::vector<Rational> parse_grid(const std::string& csv) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    const size_t comma = csv.find(',', pos);
    const std::string item =
        csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!item.empty()) out.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw usage_error("empty z grid");
  return out;
}

void require_grid_range(const std::vector<Rational>& zs) {
  for (const Rational& z : zs) {
    if (z < Rational(1, 20) || z > Rational(19, 20)) {
      throw usage_error("z grid values must lie in [0.05, 0.95]");
    }
  }
}

void require_prec(long prec) {
  if (prec < 64) throw usage_error("precision must be at least 64 bits");
  if (prec > 16384) throw usage_error("precision above 16384 bits");
}

// Rewrites "d.dddde±x" in positional notation when the exponent is small.
std::string positional(const std::string& sci) {
  const auto epos = sci.find('e');
  if (epos == std::string::npos) return sci;
  const long exp = std::stol(sci.substr(epos + 1));
  if (exp < -8 || exp > 30) return sci;
  std::string mant = sci.substr(0, epos);
  std::string sign;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    if (mant[0] == '-') sign = "-";
    mant.erase(0, 1);
  }
  mant.erase(std::remove(mant.begin(), mant.end(), '.'), mant.end());
  if (exp < 0) return sign + "0." + std::string(-exp - 1, '0') + mant;
  const auto point = static_cast<size_t>(exp) + 1;
  if (point >= mant.size()) return sign + mant + std::string(point - mant.size(), '0');
  return sign + mant.substr(0, point) + "." + mant.substr(point);
}

// Midpoint printed to the significant digits the radius justifies.
void print_ball(const RealBall& v) {
  const double rad = v.rad_double();
  const double mid = std::fabs(v.mid_double());
  long digits = 40;
  if (rad > 0) {
    const double ref = mid > 0 ? mid : 1.0;
    digits = static_cast<long>(std::floor(std::log10(ref / rad)));
    if (digits < 1) digits = 1;
    if (digits > 120) digits = 120;
  }
  std::printf("%s (radius <= %s)\n",
              positional(v.mid_decimal(static_cast<size_t>(digits))).c_str(),
              v.rad_decimal().c_str());
}

std::string word_sum_to_string(const WordSum& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  for (const auto& [w, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (c != Rational(1)) out += c.get_str() + "*";
    out += w.empty() ? "<empty>" : w;
  }
  return out;
}

const std::vector<std::string> kIdentityNames = {
    "li-reflection",        "a-reflection",
    "li-reflection-depth1", "li-reflection-block",
    "xi-zeta-expansion",    "psi-t-expansion",
    "xi-zeta-expansion-block", "xi-duality",
    "psi-duality",          "xi-duality-block",
    "xi-duality-multi"};

const std::set<std::string> kLevel2Names = {"a-reflection", "psi-t-expansion",
                                            "psi-duality"};

struct VerifyArgs {
  std::string name;
  std::string k_str;
  std::string ks_str;
  int a = -1;
  int b = -1;
  int m = 1;
  std::string z_grid_str;
  double tol = 0.0;  // 0 = default per level
  long prec = 128;
  bool json = false;
  bool list = false;
  double rhs_shift = 0.0;
  std::string reading;
  std::string xi_route = "sum";
};

Index required_index(const std::string& s, const char* what) {
  if (s.empty()) throw usage_error(std::string("missing --") + what);
  return index_from_string(s);
}

int required_int(int v, const char* what) {
  if (v < 0) throw usage_error(std::string("missing --") + what);
  return v;
}

SignReading reading_from_string(const std::string& s) {
  if (s == "as-printed") return SignReading::AsPrinted;
  if (s == "shifted-sign") return SignReading::ShiftedSign;
  if (s == "corrected") return SignReading::Corrected;
  throw usage_error("unknown reading '" + s +
                    "' (as-printed, shifted-sign, corrected)");
}

int cmd_verify(const VerifyArgs& va) {
  if (va.list) {
    for (const std::string& n : kIdentityNames) std::printf("%s\n", n.c_str());
    return 0;
  }
  if (va.name.empty()) throw usage_error("missing identity name");
  require_prec(va.prec);

  VerifyOptions opt;
  opt.prec = static_cast<mpfr_prec_t>(va.prec);
  opt.tol = va.tol > 0 ? va.tol : (kLevel2Names.count(va.name) ? 1e-10 : 1e-20);
  if (va.tol < 0) throw usage_error("tolerance must be positive");
  opt.zs = va.z_grid_str.empty() ? default_z_grid() : parse_grid(va.z_grid_str);
  require_grid_range(opt.zs);
  opt.rhs_shift = va.rhs_shift;
  if (va.xi_route == "poset") {
    opt.xi_route = EvalOptions::XiRoute::Poset;
  } else if (va.xi_route != "sum") {
    throw usage_error("unknown xi route '" + va.xi_route + "' (sum, poset)");
  }

  VerificationReport rep;
  if (va.name == "xi-duality-multi") {
    const Index ks = required_index(va.ks_str, "ks");
    const int a = va.a < 0 ? 1 : va.a;
    if (!va.reading.empty()) {
      rep = verify(xi_duality_multi(a, va.m, ks, reading_from_string(va.reading)),
                   opt);
    } else {
      // Builder throws on out-of-domain parameters; surface that as a usage
      // error before adjudication starts swallowing reports.
      xi_duality_multi(a, va.m, ks, SignReading::Corrected);
      rep = verify_xi_duality_multi(a, va.m, ks, opt);
    }
  } else if (va.name == "li-reflection") {
    rep = verify(li_reflection(required_index(va.k_str, "k")), opt);
  } else if (va.name == "a-reflection") {
    rep = verify(a_reflection(required_index(va.k_str, "k")), opt);
  } else if (va.name == "li-reflection-depth1") {
    const Index k = required_index(va.k_str, "k");
    if (k.size() != 1) {
      throw usage_error("li-reflection-depth1 takes a single-entry --k");
    }
    rep = verify(li_reflection_depth1(k[0]), opt);
  } else if (va.name == "li-reflection-block") {
    rep = verify(
        li_reflection_block(required_int(va.a, "a"), required_int(va.b, "b")),
        opt);
  } else if (va.name == "xi-zeta-expansion") {
    rep = verify(xi_zeta_expansion(required_index(va.k_str, "k"), va.m), opt);
  } else if (va.name == "psi-t-expansion") {
    rep = verify(psi_t_expansion(required_index(va.k_str, "k"), va.m), opt);
  } else if (va.name == "xi-zeta-expansion-block") {
    rep = verify(xi_zeta_expansion_block(required_int(va.a, "a"),
                                         required_int(va.b, "b"), va.m),
                 opt);
  } else if (va.name == "xi-duality") {
    rep = verify(xi_duality(required_index(va.k_str, "k"), va.m), opt);
  } else if (va.name == "psi-duality") {
    rep = verify(psi_duality(required_index(va.k_str, "k"), va.m), opt);
  } else if (va.name == "xi-duality-block") {
    rep = verify(xi_duality_block(required_int(va.a, "a"),
                                  required_int(va.b, "b"), va.m),
                 opt);
  } else {
    throw usage_error("unknown identity '" + va.name +
                      "'; see `akzeta verify --list`");
  }

  if (va.json) {
    std::printf("%s\n", rep.to_json().c_str());
  } else {
    std::printf("%s\n", rep.summary().c_str());
  }
  return rep.pass ? 0 : 1;
}

int cmd_index(const std::string& op, const std::string& kstr) {
  const Index k = index_from_string(kstr);
  if (op == "dual") {
    std::printf("%s\n", index_to_string(dual(k)).c_str());
  } else if (op == "hdual") {
    std::printf("%s\n", index_to_string(hoffman_dual(k)).c_str());
  } else if (op == "rev") {
    std::printf("%s\n", index_to_string(reverse_blocks(k)).c_str());
  } else if (op == "minus") {
    std::printf("%s\n", index_to_string(k_minus(k)).c_str());
  } else {  // blocks
    const BlockForm bf = to_blocks(k);
    std::string out = "[";
    for (int i = 0; i < bf.count(); ++i) {
      if (i) out += ",";
      out += "(" + std::to_string(bf.blocks[static_cast<size_t>(i)].a) + "," +
             std::to_string(bf.blocks[static_cast<size_t>(i)].b) + ")";
    }
    out += "]";
    std::printf("%s\n", out.c_str());
  }
  return 0;
}

int cmd_eval(const std::string& kind, const std::string& kstr,
             const std::string& zstr, int m, long prec) {
  require_prec(prec);
  const auto p = static_cast<mpfr_prec_t>(prec);
  const Index k = index_from_string(kstr);
  if (kind == "zeta") {
    print_ball(mzv(k, p));
  } else if (kind == "t") {
    print_ball(mtv(k, p));
  } else if (kind == "xi") {
    if (m < 1) throw usage_error("xi needs --m >= 1");
    print_ball(xi_int(k, m, p));
  } else if (kind == "psi") {
    if (m < 1) throw usage_error("psi needs --m >= 1");
    print_ball(psi_int(k, m, p));
  } else {
    if (zstr.empty()) throw usage_error(kind + " needs --z");
    const Rational z = parse_rational(zstr);
    if (z <= 0 || z >= 1) throw usage_error("--z must lie in (0, 1)");
    print_ball(kind == "li" ? li_eval(k, z, p) : a_eval(k, z, p));
  }
  return 0;
}

int cmd_suite(const std::string& name, long max_weight, long prec, bool audit,
              bool quiet) {
  require_prec(prec);
  if (max_weight < 1) throw usage_error("--max-weight must be >= 1");
  SuiteOptions opt;
  opt.max_weight = max_weight;
  opt.prec = static_cast<mpfr_prec_t>(prec);
  opt.oracle_audit = audit;
  if (!quiet) {
    opt.log = [](const std::string& line) {
      std::fprintf(stderr, "%s\n", line.c_str());
    };
  }

  std::vector<SuiteResult> results;
  if (name == "combinatorics") {
    results.push_back(run_combinatorics_suite(opt));
  } else if (name == "posets") {
    results.push_back(run_posets_suite(opt));
  } else if (name == "level1") {
    results.push_back(run_level1_suite(opt));
  } else if (name == "level2") {
    results.push_back(run_level2_suite(opt));
  } else {
    results = run_all_suites(opt);
  }
  bool pass = true;
  for (const SuiteResult& res : results) {
    std::printf("%s", res.table().c_str());
    pass = pass && res.pass;
  }
  return pass ? 0 : 1;
}

int cmd_cache(const std::string& op) {
  ConstCache& cache = ConstCache::instance();
  if (op == "clear") {
    cache.clear();
    std::printf("cache cleared\n");
    return 0;
  }
  const ConstCache::Stats st = cache.stats();
  const std::string path = st.path.empty() ? "(disabled)" : st.path;
  if (op == "path") {
    std::printf("%s\n", path.c_str());
    return 0;
  }
  std::printf("entries: %zu\nhits: %zu\nmisses: %zu\npath: %s\n", st.entries,
              st.hits, st.misses, path.c_str());
  return 0;
}

int cmd_poset(const std::string& op, const std::string& json,
              const std::string& zstr, long prec) {
  require_prec(prec);
  const TwoPoset x = TwoPoset::from_json(json);
  if (op == "wmap") {
    std::printf("%s\n", word_sum_to_string(w_map(x)).c_str());
  } else if (op == "transpose") {
    std::printf("%s\n", transpose(x).to_json().c_str());
  } else {  // eval
    const auto p = static_cast<mpfr_prec_t>(prec);
    if (zstr.empty()) {
      print_ball(i_one(x, p));
    } else {
      const Rational z = parse_rational(zstr);
      if (z <= 0 || z >= 1) throw usage_error("--z must lie in (0, 1)");
      print_ball(i_z(x, z, p));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "akzeta: index combinatorics, 2-poset word sums, and high-precision "
      "verification of zeta-function identities"};
  app.require_subcommand(1);
  std::string cache_path;
  bool cache_path_set = false;
  app.add_option("--cache", cache_path,
                 "Constant cache file (overrides AKZETA_CACHE; empty "
                 "disables)")
      ->expected(1)
      ->each([&](const std::string&) { cache_path_set = true; });

  auto* idx = app.add_subcommand("index", "Index operations");
  std::string idx_op, idx_k;
  idx->add_option("op", idx_op, "dual, hdual, blocks, rev, or minus")
      ->required()
      ->check(CLI::IsMember({"dual", "hdual", "blocks", "rev", "minus"}));
  idx->add_option("k", idx_k, "Index in the form (k1,k2,...)")->required();

  auto* ev = app.add_subcommand("eval", "Evaluate a constant or function");
  std::string ev_kind, ev_k, ev_z;
  int ev_m = 1;
  long ev_prec = 128;
  ev->add_option("kind", ev_kind, "li, a, zeta, t, xi, or psi")
      ->required()
      ->check(CLI::IsMember({"li", "a", "zeta", "t", "xi", "psi"}));
  ev->add_option("k", ev_k, "Index in the form (k1,k2,...)")->required();
  ev->add_option("--z", ev_z, "Evaluation point for li/a, in (0,1)");
  ev->add_option("--m", ev_m, "Trailing argument for xi/psi (default 1)");
  ev->add_option("--prec", ev_prec, "Working precision in bits (default 128)");

  auto* vf = app.add_subcommand("verify", "Verify one identity instance");
  VerifyArgs va;
  vf->add_option("name", va.name, "Identity name; see --list");
  vf->add_option("--k", va.k_str, "Index parameter (k1,k2,...)");
  vf->add_option("--ks", va.ks_str, "Entry list for xi-duality-multi");
  vf->add_option("--a", va.a, "Leading-ones parameter");
  vf->add_option("--b", va.b, "Block-height parameter");
  vf->add_option("--m", va.m, "Shift parameter (default 1)");
  vf->add_option("--z-grid", va.z_grid_str,
                 "Comma-separated z values in [0.05,0.95]");
  vf->add_option("--tol", va.tol, "Deviation tolerance (default per level)");
  vf->add_option("--prec", va.prec, "Working precision in bits (default 128)");
  vf->add_flag("--json", va.json, "Emit the JSON report");
  vf->add_flag("--list", va.list, "List identity names and exit");
  vf->add_option("--rhs-shift", va.rhs_shift,
                 "Deliberate additive perturbation of the right side");
  vf->add_option("--reading", va.reading,
                 "Pin the xi-duality-multi reading instead of adjudicating");
  vf->add_option("--xi-route", va.xi_route,
                 "Evaluation route for xi symbols: sum (default) or poset");

  auto* su = app.add_subcommand("suite", "Run a verification suite");
  std::string su_name;
  long su_weight = 5;
  long su_prec = 128;
  bool su_no_audit = false;
  bool su_quiet = false;
  su->add_option("name", su_name,
                 "combinatorics, posets, level1, level2, or all")
      ->required()
      ->check(CLI::IsMember(
          {"combinatorics", "posets", "level1", "level2", "all"}));
  su->add_option("--max-weight", su_weight, "Index sweep bound (default 5)");
  su->add_option("--prec", su_prec, "Working precision in bits (default 128)");
  su->add_flag("--no-audit", su_no_audit, "Skip the per-symbol oracle audit");
  su->add_flag("--quiet", su_quiet, "No per-check progress on stderr");

  auto* ca = app.add_subcommand("cache", "Inspect or reset the constant cache");
  std::string ca_op;
  ca->add_option("op", ca_op, "stats, clear, or path")
      ->required()
      ->check(CLI::IsMember({"stats", "clear", "path"}));

  auto* po = app.add_subcommand("poset", "2-poset operations");
  std::string po_op, po_json, po_z;
  long po_prec = 128;
  po->add_option("op", po_op, "wmap, transpose, or eval")
      ->required()
      ->check(CLI::IsMember({"wmap", "transpose", "eval"}));
  po->add_option("json", po_json,
                 R"(Poset as {"labels":[...],"covers":[[i,j],...]})")
      ->required();
  po->add_option("--z", po_z, "Evaluate words at z instead of 1");
  po->add_option("--prec", po_prec, "Working precision in bits (default 128)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cache_path_set) ConstCache::instance().set_path(cache_path);
    if (app.got_subcommand(idx)) return cmd_index(idx_op, idx_k);
    if (app.got_subcommand(ev)) {
      return cmd_eval(ev_kind, ev_k, ev_z, ev_m, ev_prec);
    }
    if (app.got_subcommand(vf)) return cmd_verify(va);
    if (app.got_subcommand(su)) {
      return cmd_suite(su_name, su_weight, su_prec, !su_no_audit, su_quiet);
    }
    if (app.got_subcommand(ca)) return cmd_cache(ca_op);
    if (app.got_subcommand(po)) return cmd_poset(po_op, po_json, po_z, po_prec);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 2;
}
