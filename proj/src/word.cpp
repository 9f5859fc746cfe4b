#include "akzeta/word.hpp"

#include <algorithm>

#include <json.hpp>

namespace akzeta {

bool is_word(const Word& w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

bool in_h1(const Word& w) { return w.empty() || w.front() == '1'; }

bool in_h0(const Word& w) {
  return w.empty() || (w.front() == '1' && w.back() == '0');
}

Word index_to_word(const Index& k) {
  Word w;
  for (int v : k) {
    if (v < 1) throw word_error("index_to_word: entries must be >= 1");
    w += '1';
    w.append(static_cast<size_t>(v - 1), '0');
  }
  return w;
}

Index word_to_index(const Word& w) {
  if (!is_word(w)) throw word_error("word_to_index: bad letter");
  if (!in_h1(w)) throw word_error("word_to_index: word not in h1");
  Index k;
  for (char c : w) {
    if (c == '1')
      k.push_back(1);
    else
      ++k.back();
  }
  return k;
}

Word word_dual(const Word& w) {
  if (!is_word(w)) throw word_error("word_dual: bad letter");
  if (!in_h0(w)) throw word_error("word_dual: word not in h0");
  Word d(w.rbegin(), w.rend());
  for (char& c : d) c = (c == '0') ? '1' : '0';
  return d;
}

WordSum::WordSum(const Word& w, const Rational& c) { add_term(w, c); }

void WordSum::add_term(const Word& w, const Rational& c) {
  if (!is_word(w)) throw word_error("WordSum: bad letter in '" + w + "'");
  if (c == 0) return;
  Rational& slot = terms_[w];
  slot += c;
  if (slot == 0) terms_.erase(w);
}

WordSum& WordSum::operator+=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WordSum& WordSum::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coef] : terms_) coef *= c;
  return *this;
}

std::string WordSum::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [w, c] : terms_) j[w] = c.get_str();
  return j.dump();
}

namespace {

WordSum shuffle_suffix(const Word& u, size_t i, const Word& v, size_t j) {
  if (i == u.size()) return WordSum(v.substr(j));
  if (j == v.size()) return WordSum(u.substr(i));
  WordSum out;
  const WordSum left = shuffle_suffix(u, i + 1, v, j);
  for (const auto& [w, c] : left.terms()) out.add_term(u[i] + w, c);
  const WordSum right = shuffle_suffix(u, i, v, j + 1);
  for (const auto& [w, c] : right.terms()) out.add_term(v[j] + w, c);
  return out;
}

}  // namespace

WordSum shuffle(const Word& u, const Word& v) {
  if (!is_word(u) || !is_word(v)) throw word_error("shuffle: bad letter");
  return shuffle_suffix(u, 0, v, 0);
}

WordSum shuffle(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out += shuffle(u, v) * (cu * cv);
  return out;
}

}  // namespace akzeta
