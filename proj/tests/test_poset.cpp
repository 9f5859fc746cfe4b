#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "akzeta/index.hpp"
#include "akzeta/poset.hpp"
#include "akzeta/quadrature.hpp"
#include "akzeta/word.hpp"
#include "akzeta/zeta_values.hpp"

using namespace akzeta;

namespace {

WordSum ws(std::initializer_list<std::pair<const char*, int>> terms) {
  WordSum out;
  for (const auto& [w, c] : terms) out.add_term(w, c);
  return out;
}

std::vector<Index> positive_indices_up_to(int max_weight) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w) {
    for (int d = 1; d <= w; ++d) {
      for (const NonNegIndex& e : compositions(w - d, d)) {
        Index k(e.begin(), e.end());
        for (int& v : k) v += 1;
        out.push_back(k);
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates labels and rejects cycles") {
  CHECK_NOTHROW(TwoPoset({1, 0}, {{0, 1}}));
  CHECK_THROWS_AS(TwoPoset({1, 2}, {}), poset_error);
  CHECK_THROWS_AS(TwoPoset({1, 0}, {{0, 2}}), poset_error);
  CHECK_THROWS_AS(TwoPoset({1, 0}, {{0, 0}}), poset_error);
  CHECK_THROWS_AS(TwoPoset({1, 0}, {{0, 1}, {1, 0}}), poset_error);
  CHECK_THROWS_AS(TwoPoset({1, 0, 1}, {{0, 1}, {1, 2}, {2, 0}}), poset_error);
}

TEST_CASE("order queries follow the transitive closure") {
  TwoPoset x({1, 1, 0, 0}, {{0, 1}, {1, 2}, {3, 2}});
  CHECK(x.less(0, 2));
  CHECK(!x.less(2, 0));
  CHECK(!x.less(0, 3));
  CHECK(x.comparable(0, 0));
  CHECK(x.comparable(3, 2));
  CHECK(!x.comparable(1, 3));
}

TEST_CASE("admissibility by labels of extremal elements") {
  TwoPoset bullet_circle({1, 0}, {{0, 1}});
  CHECK(is_semi_admissible(bullet_circle));
  CHECK(is_admissible_poset(bullet_circle));

  TwoPoset circle_circle({0, 0}, {{0, 1}});
  CHECK(!is_semi_admissible(circle_circle));
  CHECK(!is_admissible_poset(circle_circle));

  TwoPoset two_bullets({1, 1}, {});
  CHECK(is_semi_admissible(two_bullets));
  CHECK(!is_admissible_poset(two_bullets));

  TwoPoset empty;
  CHECK(is_semi_admissible(empty));
  CHECK(is_admissible_poset(empty));
}

TEST_CASE("transpose reverses order, flips labels, and is an involution") {
  CHECK(w_map(transpose(chain_from_index({2}))) == ws({{"10", 1}}));
  CHECK(w_map(transpose(chain_from_index({1, 2}))) == ws({{"100", 1}}));
  CHECK(transpose(TwoPoset()).size() == 0);

  TwoPoset x({1, 1, 0, 0}, {{0, 1}, {1, 2}, {0, 3}});
  CHECK(w_map(transpose(transpose(x))) == w_map(x));
}

TEST_CASE("disjoint union is the shuffle multiplication") {
  TwoPoset empty;
  TwoPoset chain = chain_from_index({2, 1});
  CHECK(w_map(disjoint_union(chain, empty)) == w_map(chain));
  CHECK(w_map(disjoint_union(empty, chain)) == w_map(chain));

  TwoPoset s1({1}, {});
  CHECK(w_map(disjoint_union(s1, s1)) == ws({{"11", 2}}));

  TwoPoset a = chain_from_index({2});
  TwoPoset b = xi_poset({1}, 2);
  CHECK(w_map(disjoint_union(a, b)) == w_map(disjoint_union(b, a)));
  CHECK(w_map(disjoint_union(a, b)) == shuffle(w_map(a), w_map(b)));
  CHECK(w_map(disjoint_union(b, b)) == shuffle(w_map(b), w_map(b)));
}

TEST_CASE("w images of small named posets") {
  CHECK(w_map(TwoPoset({1, 1}, {})) == ws({{"11", 2}}));
  for (const Index& k :
       std::vector<Index>{{}, {2}, {1, 2}, {3, 1, 2}, {1, 1, 1}}) {
    CHECK(w_map(chain_from_index(k)) == WordSum(index_to_word(k)));
  }
  CHECK(w_map(xi_poset({1}, 2)) == ws({{"110", 2}}));
  CHECK(w_map(xi_poset({2}, 2)) == ws({{"1010", 1}, {"1100", 2}}));
  CHECK(w_map(xi_poset({1}, 1)) == ws({{"10", 1}}));
  CHECK(w_map(v_poset({2}, 0, 0)) == ws({{"10", 1}}));
  CHECK(w_map(v_poset({2}, 1, 0)) == ws({{"110", 2}}));
  CHECK(w_map(v_poset({2}, 0, 1)) == ws({{"101", 1}}));
}

TEST_CASE("poset builders reject bad arguments") {
  CHECK_THROWS_AS(xi_poset({}, 2), poset_error);
  CHECK_THROWS_AS(xi_poset({0, 2}, 2), poset_error);
  CHECK_THROWS_AS(xi_poset({1}, 0), poset_error);
  CHECK_THROWS_AS(v_poset({2, 1}, 1, 0), poset_error);
  CHECK_THROWS_AS(v_poset({1}, 1, 0), poset_error);
  CHECK_THROWS_AS(v_poset({}, 0, 0), poset_error);
  CHECK_THROWS_AS(v_poset({2}, -1, 0), poset_error);
  CHECK_THROWS_AS(chain_from_index({2, 0}), poset_error);
}

TEST_CASE("recursion agrees with linear-extension enumeration") {
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<int> size_dist(1, 8);
  std::bernoulli_distribution edge(0.3);
  std::bernoulli_distribution lab(0.5);

  int admissible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size_dist(rng);
    std::vector<int> labels(static_cast<size_t>(n));
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (edge(rng)) covers.emplace_back(i, j);
      }
    }
    TwoPoset shape(std::vector<int>(static_cast<size_t>(n), 1), covers);
    // Labels chosen so that a decent share of the samples is admissible.
    for (int v = 0; v < n; ++v) {
      bool minimal = true;
      bool maximal = true;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        if (shape.less(static_cast<size_t>(u), static_cast<size_t>(v)))
          minimal = false;
        if (shape.less(static_cast<size_t>(v), static_cast<size_t>(u)))
          maximal = false;
      }
      if (minimal) {
        labels[static_cast<size_t>(v)] = 1;
      } else if (maximal) {
        labels[static_cast<size_t>(v)] = 0;
      } else {
        labels[static_cast<size_t>(v)] = lab(rng) ? 1 : 0;
      }
    }
    TwoPoset x(labels, covers);
    WordSum rec = w_map(x);
    WordSum ref = w_map_by_extensions(x);
    REQUIRE(rec == ref);

    if (is_admissible_poset(x)) {
      ++admissible_seen;
      WordSum dualized;
      for (const auto& [w, c] : rec.terms()) dualized.add_term(word_dual(w), c);
      REQUIRE(dualized == w_map(transpose(x)));
    }
  }
  // The transpose/duality leg must have had real exposure.
  CHECK(admissible_seen >= 40);
}

TEST_CASE("v posets evaluate to the zeta-side interpolation") {
  for (const Index& l : std::vector<Index>{{2}, {3}, {1, 2}}) {
    for (int a = 0; a <= 2; ++a) {
      RealBall got = i_one(v_poset(l, a, 0), 128);
      RealBall want = xi_int(k_minus(l), a + 1, 128);
      CHECK((got - want).dev_within(1e-30));
    }
  }
}

TEST_CASE("tail-ones chains reduce to v posets as exact word sums") {
  for (const Index& l : std::vector<Index>{{2}, {3}, {1, 2}}) {
    for (int a = 0; a <= 3; ++a) {
      Index full = l;
      for (int t = 0; t < a; ++t) full.push_back(1);
      WordSum combo = w_map(chain_from_index(full));
      for (int d = 1; d <= a; ++d) {
        WordSum prod =
            shuffle(w_map(v_poset(l, a - d, 0)), WordSum(Word(static_cast<size_t>(d), '1')));
        if ((a - d) % 2) {
          combo += prod;
        } else {
          combo -= prod;
        }
      }
      WordSum target = w_map(v_poset(l, a, 0));
      if (a % 2) target *= Rational(-1);
      CHECK(combo == target);
    }
  }
}

TEST_CASE("chain rewriting identities hold for both inserted labels") {
  CHECK(idou_rewrite_check({1}, {1}, 1, IdouVariant::Circle));
  CHECK(idou_rewrite_check({1}, {1}, 0, IdouVariant::Bullet));
  CHECK(idou_rewrite_check({2}, {1, 2}, 0, IdouVariant::Circle));

  const std::vector<Index> pool = positive_indices_up_to(3);
  for (const Index& k : pool) {
    for (const Index& l : pool) {
      for (int count = 0; count <= 2; ++count) {
        REQUIRE(idou_rewrite_check(k, l, count, IdouVariant::Circle));
        REQUIRE(idou_rewrite_check(k, l, count, IdouVariant::Bullet));
      }
    }
  }

  CHECK_THROWS_AS(idou_rewrite_check({}, {1}, 1, IdouVariant::Circle),
                  poset_error);
  CHECK_THROWS_AS(idou_rewrite_check({1}, {1}, -1, IdouVariant::Bullet),
                  poset_error);
}

TEST_CASE("termwise evaluation matches the series route") {
  RealBall li = i_z(chain_from_index({2}), Rational(1, 2), 128);
  CHECK((li - RealBall::of_double(0.5822405264650125, 64)).dev_within(1e-15));

  CHECK((i_z(TwoPoset(), Rational(1, 2), 64) - RealBall::exact(1, 64))
            .dev_within(1e-30));

  RealBall two_zeta3 = mzv({3}, 128);
  two_zeta3.mul_2exp(1);
  CHECK((i_one(xi_poset({1}, 2), 128) - two_zeta3).dev_within(1e-30));

  TwoPoset circle_first({0, 1}, {{0, 1}});
  CHECK_THROWS_AS(i_z(circle_first, Rational(1, 2), 64), poset_error);
  CHECK_THROWS_AS(i_one(TwoPoset({1, 1}, {}), 64), poset_error);
}

TEST_CASE("JSON serialization round-trips and validates") {
  TwoPoset x = xi_poset({2}, 3);
  TwoPoset y = TwoPoset::from_json(x.to_json());
  CHECK(y.labels() == x.labels());
  CHECK(y.cover_relations() == x.cover_relations());
  CHECK(w_map(y) == w_map(x));

  CHECK_THROWS_AS(TwoPoset::from_json("not json"), poset_error);
  CHECK_THROWS_AS(TwoPoset::from_json("{\"labels\":[1]}"), poset_error);
  CHECK_THROWS_AS(TwoPoset::from_json("{\"labels\":[1],\"covers\":[[0]]}"),
                  poset_error);
  CHECK_THROWS_AS(
      TwoPoset::from_json("{\"labels\":[1,0],\"covers\":[[0,1],[1,0]]}"),
      poset_error);
}

TEST_CASE("direct integration validates the word route at low precision") {
  std::vector<TwoPoset> cases = {
      chain_from_index({2}),     chain_from_index({1, 1}),
      chain_from_index({2, 1}),  TwoPoset({1, 1}, {}),
      xi_poset({1}, 2),          v_poset({2}, 1, 0),
      TwoPoset({1, 1, 0}, {{0, 2}, {1, 2}}),
  };
  for (const TwoPoset& x : cases) {
    for (const Rational& z :
         {Rational(3, 10), Rational(1, 2), Rational(7, 10)}) {
      RealBall q = quadrature_oracle(x, z);
      RealBall s = i_z(x, z, 128);
      CHECK((q - s).contains_zero());
      CHECK(q.rad_double() < 1e-7);
    }
  }

  // Closed forms: log(2)^2/2 for the ones chain, log(2)^2 for the antichain.
  const double log2 = 0.6931471805599453;
  RealBall ones = quadrature_oracle(chain_from_index({1, 1}), Rational(1, 2));
  CHECK((ones - RealBall::of_double(log2 * log2 / 2, 64)).dev_within(1e-10));
  RealBall anti = quadrature_oracle(TwoPoset({1, 1}, {}), Rational(1, 2));
  CHECK((anti - RealBall::of_double(log2 * log2, 64)).dev_within(1e-10));

  CHECK_THROWS_AS(
      quadrature_oracle(chain_from_index({1, 1, 1, 1, 1}), Rational(1, 2)),
      poset_error);
  CHECK_THROWS_AS(quadrature_oracle(TwoPoset({0}, {}), Rational(1, 2)),
                  poset_error);
  CHECK_THROWS_AS(
      quadrature_oracle(chain_from_index({2}), Rational(95, 100)), eval_error);
  CHECK_THROWS_AS(quadrature_oracle(chain_from_index({2}), Rational(1, 2), 0),
                  eval_error);
}
