#include "akzeta/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include <json.hpp>

#include "akzeta/series.hpp"
#include "akzeta/zeta_values.hpp"

namespace akzeta {

namespace {

// Extends the closure matrix with a < b: everything at or below a goes
// under everything at or above b.
void add_relation(std::vector<std::vector<bool>>& below, std::size_t a,
                  std::size_t b) {
  const std::size_t n = below.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (x != a && !below[x][a]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == b || below[b][y]) below[x][y] = true;
    }
  }
}

std::vector<std::vector<bool>> close_covers(
    const std::vector<int>& labels,
    const std::vector<std::pair<int, int>>& covers) {
  const std::size_t n = labels.size();
  for (int l : labels) {
    if (l != 0 && l != 1) throw poset_error("labels must be 0 or 1");
  }
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : covers) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n) {
      throw poset_error("cover relation out of range");
    }
    if (a == b) throw poset_error("cover relations contain a cycle");
    add_relation(below, static_cast<std::size_t>(a),
                 static_cast<std::size_t>(b));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (below[v][v]) throw poset_error("cover relations contain a cycle");
  }
  return below;
}

// Word of a totally ordered closure, labels read bottom to top. In a total
// order the number of elements strictly below v is v's position.
Word total_order_word(const std::vector<int>& labels,
                      const std::vector<std::vector<bool>>& below) {
  const std::size_t n = labels.size();
  Word w(n, '0');
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t rank = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (below[u][v]) ++rank;
    }
    w[rank] = labels[v] ? '1' : '0';
  }
  return w;
}

void w_map_rec(const std::vector<int>& labels,
               std::vector<std::vector<bool>>& below, WordSum& out) {
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (below[a][b] || below[b][a]) continue;
      std::vector<std::vector<bool>> saved = below;
      add_relation(below, a, b);
      w_map_rec(labels, below, out);
      below = saved;
      add_relation(below, b, a);
      w_map_rec(labels, below, out);
      below = std::move(saved);
      return;
    }
  }
  out.add_term(total_order_word(labels, below), 1);
}

void extensions_rec(const TwoPoset& x, std::vector<bool>& used, Word& acc,
                    WordSum& out) {
  const std::size_t n = x.size();
  if (acc.size() == n) {
    out.add_term(acc, 1);
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) continue;
    bool minimal = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && !used[u] && x.less(u, v)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    used[v] = true;
    acc.push_back(x.label(v) ? '1' : '0');
    extensions_rec(x, used, acc, out);
    acc.pop_back();
    used[v] = false;
  }
}

// Incremental poset builder used by the named diagram constructors.
struct Builder {
  std::vector<int> labels;
  std::vector<std::pair<int, int>> covers;

  int add(int label) {
    labels.push_back(label);
    return static_cast<int>(labels.size()) - 1;
  }
  void cover(int a, int b) { covers.emplace_back(a, b); }

  // Chain of the letters of w, bottom to top; returns {bottom, top} ids,
  // {-1, -1} for the empty word.
  std::pair<int, int> chain(const Word& w) {
    int first = -1;
    int prev = -1;
    for (char c : w) {
      int v = add(c == '1' ? 1 : 0);
      if (prev >= 0) {
        cover(prev, v);
      } else {
        first = v;
      }
      prev = v;
    }
    return {first, prev};
  }

  // Chain of `count` nodes with the given label above `attach` (attach < 0
  // starts a fresh chain); returns the top id, or attach when count == 0.
  int rise(int attach, int count, int label) {
    int top = attach;
    for (int t = 0; t < count; ++t) {
      int v = add(label);
      if (top >= 0) cover(top, v);
      top = v;
    }
    return top;
  }

  TwoPoset build() const { return TwoPoset(labels, covers); }
};

// Places the chain of l beside `attach` with `attach` brought in directly
// below the top of l, the same convention as every other edge meeting a
// chain from outside.
void attach_index_above(Builder& b, int attach, const Word& wl) {
  auto [lo, hi] = b.chain(wl);
  (void)lo;
  if (attach >= 0) b.cover(attach, hi);
}

Word positive_index_word(const Index& k, const char* who) {
  if (k.empty() || !is_positive_index(k)) {
    throw poset_error(std::string(who) + " requires a non-empty positive index");
  }
  return index_to_word(k);
}

}  // namespace

TwoPoset::TwoPoset(std::vector<int> labels,
                   std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)),
      covers_(std::move(covers)),
      below_(close_covers(labels_, covers_)) {}

bool TwoPoset::less(std::size_t a, std::size_t b) const {
  return below_.at(a).at(b);
}

bool TwoPoset::comparable(std::size_t a, std::size_t b) const {
  return a == b || below_.at(a).at(b) || below_.at(b).at(a);
}

TwoPoset TwoPoset::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw poset_error(std::string("invalid poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("labels") || !j.contains("covers")) {
    throw poset_error("poset JSON must carry \"labels\" and \"covers\"");
  }
  std::vector<int> labels;
  std::vector<std::pair<int, int>> covers;
  try {
    labels = j.at("labels").get<std::vector<int>>();
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2) {
        throw poset_error("each cover must be a pair [i, j]");
      }
      covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
    }
  } catch (const poset_error&) {
    throw;
  } catch (const std::exception& e) {
    throw poset_error(std::string("invalid poset JSON: ") + e.what());
  }
  return TwoPoset(std::move(labels), std::move(covers));
}

std::string TwoPoset::to_json() const {
  nlohmann::json j;
  j["labels"] = labels_;
  j["covers"] = nlohmann::json::array();
  for (const auto& [a, b] : covers_) {
    j["covers"].push_back({a, b});
  }
  return j.dump();
}

bool is_semi_admissible(const TwoPoset& x) {
  const std::size_t n = x.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (x.label(v) == 1) continue;
    bool minimal = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && x.less(u, v)) {
        minimal = false;
        break;
      }
    }
    if (minimal) return false;
  }
  return true;
}

bool is_admissible_poset(const TwoPoset& x) {
  if (!is_semi_admissible(x)) return false;
  const std::size_t n = x.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (x.label(v) == 0) continue;
    bool maximal = true;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && x.less(v, u)) {
        maximal = false;
        break;
      }
    }
    if (maximal) return false;
  }
  return true;
}

TwoPoset transpose(const TwoPoset& x) {
  std::vector<int> labels(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) labels[v] = 1 - x.label(v);
  std::vector<std::pair<int, int>> covers;
  covers.reserve(x.cover_relations().size());
  for (const auto& [a, b] : x.cover_relations()) covers.emplace_back(b, a);
  return TwoPoset(std::move(labels), std::move(covers));
}

TwoPoset disjoint_union(const TwoPoset& x, const TwoPoset& y) {
  std::vector<int> labels = x.labels();
  labels.insert(labels.end(), y.labels().begin(), y.labels().end());
  std::vector<std::pair<int, int>> covers = x.cover_relations();
  const int off = static_cast<int>(x.size());
  for (const auto& [a, b] : y.cover_relations()) {
    covers.emplace_back(a + off, b + off);
  }
  return TwoPoset(std::move(labels), std::move(covers));
}

TwoPoset chain_from_index(const Index& k) {
  if (!k.empty() && !is_positive_index(k)) {
    throw poset_error("chain_from_index requires a positive index");
  }
  Builder b;
  b.chain(index_to_word(k));
  return b.build();
}

WordSum w_map(const TwoPoset& x) {
  std::vector<std::vector<bool>> below(x.size(),
                                       std::vector<bool>(x.size(), false));
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (a != b && x.less(a, b)) below[a][b] = true;
    }
  }
  WordSum out;
  w_map_rec(x.labels(), below, out);
  return out;
}

WordSum w_map_by_extensions(const TwoPoset& x) {
  WordSum out;
  std::vector<bool> used(x.size(), false);
  Word acc;
  acc.reserve(x.size());
  extensions_rec(x, used, acc, out);
  return out;
}

TwoPoset xi_poset(const Index& k, int m) {
  Word wk = positive_index_word(k, "xi_poset");
  if (m < 1) throw poset_error("xi_poset requires m >= 1");
  Builder b;
  auto [klo, khi] = b.chain(wk);
  (void)klo;
  int top = b.add(0);
  b.cover(khi, top);
  int side = b.rise(-1, m - 1, 1);
  if (side >= 0) b.cover(side, top);
  return b.build();
}

TwoPoset v_poset(const Index& l, int i, int j) {
  if (!is_admissible(l) || l.empty()) {
    throw poset_error("v_poset requires a non-empty admissible index");
  }
  if (i < 0 || j < 0) throw poset_error("v_poset requires i, j >= 0");
  Builder b;
  auto [llo, lhi] = b.chain(index_to_word(l));
  (void)llo;
  int branch = lhi;
  if (i > 0) {
    // Pendant chain below the top of l; its lowest element carries the
    // upward branch.
    int bottom = b.add(1);
    int top = b.rise(bottom, i - 1, 1);
    b.cover(top, lhi);
    branch = bottom;
  }
  b.rise(branch, j, 1);
  return b.build();
}

bool idou_rewrite_check(const Index& k, const Index& l, int count,
                        IdouVariant variant) {
  Word wk = positive_index_word(k, "idou_rewrite_check");
  Word wl = positive_index_word(l, "idou_rewrite_check");
  if (count < 0) throw poset_error("idou_rewrite_check requires count >= 0");

  const int mid_label = variant == IdouVariant::Circle ? 0 : 1;
  Builder lb;
  auto [klo, khi] = lb.chain(wk);
  (void)klo;
  int attach = lb.rise(khi, count, mid_label);
  attach_index_above(lb, attach, wl);
  const TwoPoset lhs_poset = lb.build();
  const WordSum lhs = w_map(lhs_poset);

  WordSum rhs;
  if (variant == IdouVariant::Circle) {
    for (int j = 0; j < count; ++j) {
      WordSum prod =
          shuffle(wk + Word(count - j, '0'), wl + Word(j, '0'));
      if (j % 2) {
        rhs -= prod;
      } else {
        rhs += prod;
      }
    }
    WordSum last;
    if (count == 0) {
      last = lhs;
    } else {
      // Chain of l extended by the circles, with the whole chain of k
      // brought in below the final circle.
      Builder pb;
      auto [plo, phi] = pb.chain(wl + Word(count, '0'));
      (void)plo;
      auto [qlo, qhi] = pb.chain(wk);
      (void)qlo;
      pb.cover(qhi, phi);
      last = w_map(pb.build());
    }
    if (count % 2) {
      rhs -= last;
    } else {
      rhs += last;
    }
  } else {
    for (int j = 0; j <= count; ++j) {
      // Chain of k with a pendant chain of j bullets below its top.
      Builder cb;
      auto [clo, chi] = cb.chain(wk);
      (void)clo;
      if (j > 0) {
        int bottom = cb.add(1);
        int top = cb.rise(bottom, j - 1, 1);
        cb.cover(top, chi);
      }
      // Chain of count - j bullets rising into l.
      Builder db;
      int top = db.rise(-1, count - j, 1);
      attach_index_above(db, top, wl);
      WordSum prod = shuffle(w_map(cb.build()), w_map(db.build()));
      if (j % 2) {
        rhs -= prod;
      } else {
        rhs += prod;
      }
    }
    // Chain of l topped by the bullets, pendant below the top of k.
    Builder qb;
    auto [qlo, qhi] = qb.chain(wl + Word(count, '1'));
    (void)qlo;
    auto [rlo, rhi] = qb.chain(wk);
    (void)rlo;
    qb.cover(qhi, rhi);
    WordSum last = w_map(qb.build());
    if (count % 2) {
      rhs += last;
    } else {
      rhs -= last;
    }
  }
  return lhs == rhs;
}

RealBall i_z(const TwoPoset& x, const Rational& z, mpfr_prec_t prec) {
  if (!is_semi_admissible(x)) {
    throw poset_error("i_z requires a semi-admissible poset");
  }
  const WordSum w = w_map(x);
  RealBall acc = RealBall::exact(0, prec);
  for (const auto& [word, coeff] : w.terms()) {
    acc += li_eval(word_to_index(word), z, prec) *
           RealBall::of_rational(coeff, prec);
  }
  return acc;
}

RealBall i_one(const TwoPoset& x, mpfr_prec_t prec) {
  if (!is_admissible_poset(x)) {
    throw poset_error("i_one requires an admissible poset");
  }
  const WordSum w = w_map(x);
  RealBall acc = RealBall::exact(0, prec);
  for (const auto& [word, coeff] : w.terms()) {
    acc += mzv(word_to_index(word), prec) * RealBall::of_rational(coeff, prec);
  }
  return acc;
}

}  // namespace akzeta
