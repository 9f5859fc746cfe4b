#include <doctest.h>

#include "akzeta/word.hpp"

using namespace akzeta;

namespace {

std::vector<Index> positive_indices(int w) {
  std::vector<Index> out;
  if (w == 0) {
    out.push_back({});
    return out;
  }
  for (int first = 1; first <= w; ++first)
    for (const Index& rest : positive_indices(w - first)) {
      Index k{first};
      k.insert(k.end(), rest.begin(), rest.end());
      out.push_back(k);
    }
  return out;
}

std::vector<Word> words_of_length(int n) {
  std::vector<Word> out{""};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const Word& w : out) {
      next.push_back(w + '0');
      next.push_back(w + '1');
    }
    out = std::move(next);
  }
  return out;
}

Rational mass(const WordSum& s) {
  Rational m = 0;
  for (const auto& [w, c] : s.terms()) m += c;
  return m;
}

}  // namespace

TEST_CASE("membership predicates") {
  CHECK(in_h1(""));
  CHECK(in_h0(""));
  CHECK(in_h1("10"));
  CHECK(in_h0("10"));
  CHECK(in_h1("11"));
  CHECK_FALSE(in_h0("11"));
  CHECK_FALSE(in_h1("01"));
}

TEST_CASE("index to word and back") {
  CHECK(index_to_word({2}) == "10");
  CHECK(index_to_word({1, 2}) == "110");
  CHECK(index_to_word({}) == "");
  CHECK(word_to_index("101") == Index{2, 1});
  CHECK(word_to_index("") == Index{});
  CHECK_THROWS_AS(word_to_index("01"), word_error);
  for (int w = 0; w <= 9; ++w)
    for (const Index& k : positive_indices(w))
      CHECK(word_to_index(index_to_word(k)) == k);
}

TEST_CASE("word_dual") {
  CHECK(word_dual("110") == "100");
  CHECK(word_dual("10") == "10");
  CHECK(word_dual("") == "");
  CHECK_THROWS_AS(word_dual("11"), word_error);
}

TEST_CASE("word_dual matches index dual up to weight 9") {
  for (int w = 0; w <= 9; ++w)
    for (const Index& k : positive_indices(w)) {
      if (!is_admissible(k)) continue;
      CHECK(word_to_index(word_dual(index_to_word(k))) == dual(k));
      CHECK(word_dual(word_dual(index_to_word(k))) == index_to_word(k));
    }
}

TEST_CASE("shuffle base examples") {
  WordSum two_11;
  two_11.add_term("11", 2);
  CHECK(shuffle(Word("1"), Word("1")) == two_11);

  WordSum ex;
  ex.add_term("110", 2);
  ex.add_term("101", 1);
  CHECK(shuffle(Word("1"), Word("10")) == ex);

  CHECK(shuffle(Word("10"), Word("")) == WordSum("10"));
  CHECK(shuffle(Word(""), Word("")) == WordSum(""));
}

TEST_CASE("shuffle mass, commutativity, integrality") {
  for (int lu = 0; lu <= 5; ++lu)
    for (int lv = 0; lv <= 5; ++lv)
      for (const Word& u : words_of_length(lu))
        for (const Word& v : words_of_length(lv)) {
          WordSum s = shuffle(u, v);
          CHECK(mass(s) == Rational(binomial(lu + lv, lu)));
          CHECK(s == shuffle(v, u));
          for (const auto& [w, c] : s.terms()) {
            CHECK(c.get_den() == 1);
            CHECK(static_cast<int>(w.size()) == lu + lv);
          }
        }
}

TEST_CASE("shuffle associativity on samples") {
  std::vector<Word> ws{"1", "10", "110", "100"};
  for (const Word& a : ws)
    for (const Word& b : ws)
      for (const Word& c : ws)
        CHECK(shuffle(shuffle(WordSum(a), WordSum(b)), WordSum(c)) ==
              shuffle(WordSum(a), shuffle(WordSum(b), WordSum(c))));
}

TEST_CASE("h1 closure under shuffle") {
  for (const Word& u : words_of_length(4))
    for (const Word& v : words_of_length(4)) {
      if (!in_h1(u) || !in_h1(v)) continue;
      for (const auto& [w, c] : shuffle(u, v).terms()) CHECK(in_h1(w));
    }
}

TEST_CASE("WordSum arithmetic and canonical form") {
  WordSum s("10", Rational(1, 2));
  s += WordSum("10", Rational(1, 2));
  CHECK(s == WordSum("10"));
  s -= WordSum("10");
  CHECK(s.is_zero());
  CHECK(s.terms().empty());
  WordSum t("1", 3);
  t *= 0;
  CHECK(t.is_zero());
}

TEST_CASE("WordSum JSON form") {
  WordSum s;
  s.add_term("10", Rational(1, 2));
  s.add_term("1", -2);
  CHECK(s.to_json() == R"({"1":"-2","10":"1/2"})");
  CHECK(WordSum().to_json() == "{}");
}
