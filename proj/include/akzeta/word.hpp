#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "akzeta/index.hpp"
#include "akzeta/rational.hpp"

namespace akzeta {

// Words over {e0, e1} in text form: '1' = e1, '0' = e0, read left to right,
// so "110" is e1 e1 e0. The empty word is the algebra unit.
using Word = std::string;

struct word_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_word(const Word& w);
// h1: empty or starts with e1. h0: additionally ends with e0.
bool in_h1(const Word& w);
bool in_h0(const Word& w);

// k = (k_1,...,k_r) -> e1 e0^{k_1-1} ... e1 e0^{k_r-1}; inverses of each
// other between positive indices and h1 words.
Word index_to_word(const Index& k);
Index word_to_index(const Word& w);

// Reverse the letters and swap e0 <-> e1; realizes index duality on h0.
Word word_dual(const Word& w);

// Rational linear combination of words, zero coefficients never stored.
class WordSum {
 public:
  WordSum() = default;
  explicit WordSum(const Word& w, const Rational& c = 1);

  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Rational& c);

  WordSum& operator+=(const WordSum& o);
  WordSum& operator-=(const WordSum& o);
  WordSum& operator*=(const Rational& c);
  friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
  friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
  friend WordSum operator*(WordSum a, const Rational& c) { return a *= c; }
  friend WordSum operator*(const Rational& c, WordSum a) { return a *= c; }
  friend bool operator==(const WordSum&, const WordSum&) = default;

  // JSON object mapping word text to the coefficient as "p/q" (or "p" when
  // the denominator is 1).
  std::string to_json() const;

 private:
  std::map<Word, Rational> terms_;
};

WordSum shuffle(const Word& u, const Word& v);
WordSum shuffle(const WordSum& a, const WordSum& b);

}  // namespace akzeta
