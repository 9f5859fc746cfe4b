#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "akzeta/ball.hpp"
#include "akzeta/index.hpp"
#include "akzeta/rational.hpp"
#include "akzeta/word.hpp"

namespace akzeta {

struct poset_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite poset whose elements carry a {0,1} label: 1 is drawn as a bullet,
// 0 as a circle. The order is the transitive closure of the given cover
// relations; construction rejects cycles. Element ids are 0..size()-1 and
// stay stable under all queries.
class TwoPoset {
 public:
  TwoPoset() = default;
  TwoPoset(std::vector<int> labels, std::vector<std::pair<int, int>> covers);

  std::size_t size() const { return labels_.size(); }
  int label(std::size_t v) const { return labels_.at(v); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::pair<int, int>>& cover_relations() const {
    return covers_;
  }

  // Strict order in the closure.
  bool less(std::size_t a, std::size_t b) const;
  bool comparable(std::size_t a, std::size_t b) const;

  // {"labels":[0|1,...], "covers":[[i,j],...]}, elements indexed 0..n-1.
  static TwoPoset from_json(const std::string& text);
  std::string to_json() const;

 private:
  std::vector<int> labels_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<bool>> below_;
};

// Semi-admissible: every minimal element is a bullet. Admissible adds that
// every maximal element is a circle. The empty poset is admissible.
bool is_semi_admissible(const TwoPoset& x);
bool is_admissible_poset(const TwoPoset& x);

// Order reversed and labels flipped; an involution. On admissible posets
// the w image of the transpose is the termwise word dual.
TwoPoset transpose(const TwoPoset& x);

// Side-by-side union; ids of y are shifted by x.size(). w_map turns this
// into the shuffle product.
TwoPoset disjoint_union(const TwoPoset& x, const TwoPoset& y);

// Totally ordered poset reading index_to_word(k) bottom to top.
TwoPoset chain_from_index(const Index& k);

// The word-valued linearization: a totally ordered poset contributes the
// single word of its labels read bottom to top, and otherwise
//   W(X) = W(X with a<b added) + W(X with b<a added)
// for an incomparable pair (a,b); the result does not depend on the pair,
// and we pick the id-lexicographically smallest for determinism.
WordSum w_map(const TwoPoset& x);

// Reference evaluation: sum the label words of all linear extensions.
WordSum w_map_by_extensions(const TwoPoset& x);

// Chain of k and a chain of m-1 bullets, both below one added top circle.
// Its value under i_one is the zeta-side interpolation at (k; m).
TwoPoset xi_poset(const Index& k, int m);

// Chain of an admissible l with a pendant chain of i bullets below the top
// of l and a chain of j bullets growing upward from the pendant's lowest
// element (from the top of l when i = 0).
// i_one(v_poset(l, a, 0)) equals xi_int(k_minus(l), a+1).
TwoPoset v_poset(const Index& l, int i, int j);

enum class IdouVariant { Circle, Bullet };

// Exact rewriting identity for a block of `count` circles (Circle) or
// bullets (Bullet) inserted between the chains of k and l: the w image of
// the combined diagram equals an alternating sum of shuffle products of
// smaller diagrams plus a final reattached diagram. Returns whether the two
// WordSums agree exactly; a false return signals a bug.
bool idou_rewrite_check(const Index& k, const Index& l, int count,
                        IdouVariant variant);

// Evaluate the w image termwise: words as multiple polylogarithms at z
// (requires semi-admissibility, 0 < z < 1), or as multiple zeta values at 1
// (requires admissibility).
RealBall i_z(const TwoPoset& x, const Rational& z, mpfr_prec_t prec);
RealBall i_one(const TwoPoset& x, mpfr_prec_t prec);

}  // namespace akzeta
