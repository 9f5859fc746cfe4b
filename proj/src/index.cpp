#include "akzeta/index.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace akzeta {

long long weight(const NonNegIndex& e) {
  return std::accumulate(e.begin(), e.end(), 0LL);
}

int depth(const NonNegIndex& e) { return static_cast<int>(e.size()); }

bool is_positive_index(const Index& k) {
  return std::all_of(k.begin(), k.end(), [](int v) { return v >= 1; });
}

bool is_admissible(const Index& k) {
  return is_positive_index(k) && (k.empty() || k.back() >= 2);
}

static void require_positive(const Index& k, const char* who) {
  if (!is_positive_index(k))
    throw index_error(std::string(who) + ": entries must be >= 1");
}

BlockForm to_blocks(const Index& k) {
  require_positive(k, "to_blocks");
  BlockForm bf;
  int ones = 0;
  for (int v : k) {
    if (v == 1) {
      ++ones;
    } else {
      bf.blocks.push_back({ones + 1, v - 1});
      ones = 0;
    }
  }
  if (ones > 0) bf.blocks.push_back({ones, 0});  // trailing run of ones
  return bf;
}

Index from_blocks(const BlockForm& bf) {
  Index k;
  const int n = bf.count();
  for (int i = 0; i < n; ++i) {
    const Block& bl = bf.blocks[i];
    if (bl.a < 1) throw index_error("from_blocks: a_i must be >= 1");
    if (bl.b < 1 && i + 1 < n)
      throw index_error("from_blocks: interior b_i must be >= 1");
    if (bl.b < 0) throw index_error("from_blocks: b_n must be >= 0");
    k.insert(k.end(), bl.a - 1, 1);
    k.push_back(bl.b + 1);
  }
  // A final b_n = 0 emits the entry 1, which is exactly the trailing ones
  // encoding, so nothing special is needed here.
  return k;
}

Index k_minus(const Index& k) {
  if (k.empty()) throw index_error("k_minus: empty index");
  require_positive(k, "k_minus");
  Index r = k;
  if (r.back() >= 2)
    --r.back();
  else
    r.pop_back();
  return r;
}

NonNegIndex e_plus(const NonNegIndex& e) {
  if (e.empty()) throw index_error("e_plus: empty index");
  NonNegIndex r = e;
  ++r.back();
  return r;
}

Index add(const Index& k, const NonNegIndex& e) {
  if (k.size() != e.size()) throw index_error("add: depth mismatch");
  Index r = k;
  for (size_t i = 0; i < r.size(); ++i) r[i] += e[i];
  return r;
}

Index dual(const Index& k) {
  if (!is_admissible(k)) throw index_error("dual: index not admissible");
  require_positive(k, "dual");
  BlockForm bf = to_blocks(k);
  BlockForm out;
  for (auto it = bf.blocks.rbegin(); it != bf.blocks.rend(); ++it)
    out.blocks.push_back({it->b, it->a});
  return from_blocks(out);
}

Index hoffman_dual(const Index& k) {
  if (k.empty()) throw index_error("hoffman_dual: empty index");
  // Separators between the wt(k) ones: '+' inside a run, ',' at run ends.
  // The dual swaps the two kinds. A leading zero entry contributes an empty
  // run whose single separator transposes to a vacuous leading '+'.
  Index body = k;
  if (body.front() == 0) {
    body.erase(body.begin());
    if (body.empty()) return {};  // (0) -> empty index
  }
  for (int v : body)
    if (v < 1) throw index_error("hoffman_dual: zero entry not leading");
  const long long w = weight(body);
  std::vector<bool> comma(static_cast<size_t>(w > 0 ? w - 1 : 0), false);
  long long pos = 0;
  for (size_t i = 0; i + 1 < body.size(); ++i) {
    pos += body[i];
    comma[static_cast<size_t>(pos - 1)] = true;
  }
  Index out;
  int run = 1;
  for (size_t s = 0; s < comma.size(); ++s) {
    if (!comma[s]) {  // was '+', becomes ',' : close the run
      out.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  out.push_back(run);
  return out;
}

Index slice(const Index& k, int i, int j) {
  BlockForm bf = to_blocks(k);
  const int n = bf.count();
  if (i < 0 || j < i || j > n) throw index_error("slice: range out of bounds");
  BlockForm part;
  part.blocks.assign(bf.blocks.begin() + i, bf.blocks.begin() + j);
  // An interior slice may end in a block with b = 0 only if it includes the
  // final block; interior blocks always have b >= 1, so from_blocks is happy.
  return from_blocks(part);
}

Index head_blocks(const Index& k, int j) { return slice(k, 0, j); }

Index tail_blocks(const Index& k, int i) {
  return slice(k, i, to_blocks(k).count());
}

Index reverse_blocks(const Index& k) {
  BlockForm bf = to_blocks(k);
  Index out;
  for (auto it = bf.blocks.rbegin(); it != bf.blocks.rend(); ++it) {
    out.push_back(it->b + 1);
    out.insert(out.end(), it->a - 1, 1);
  }
  return out;
}

std::vector<NonNegIndex> compositions(int w, int d) {
  std::vector<NonNegIndex> out;
  if (d == 0) {
    if (w == 0) out.push_back({});
    return out;
  }
  // Colex: recurse on the last entry, smallest last entry first.
  NonNegIndex cur(static_cast<size_t>(d), 0);
  // Iterative odometer in colex order: advance the first position that can
  // donate to the right... simpler: recursive lambda on suffix length.
  struct Rec {
    std::vector<NonNegIndex>& out;
    NonNegIndex& cur;
    void go(int remaining, int pos) {
      if (pos < 0) {
        if (remaining == 0) out.push_back(cur);
        return;
      }
      if (pos == 0) {
        cur[0] = remaining;
        out.push_back(cur);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        go(remaining - v, pos - 1);
      }
    }
  } rec{out, cur};
  rec.go(w, d - 1);
  return out;
}

Integer binomial(long n, long r) {
  if (r < 0 || r > n || n < 0) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

Integer binom_b(const Index& k, const NonNegIndex& e) {
  if (k.size() != e.size()) throw index_error("binom_b: depth mismatch");
  Integer out = 1;
  for (size_t i = 0; i < k.size(); ++i)
    out *= binomial(k[i] + e[i] - 1, e[i]);
  return out;
}

std::string index_to_string(const NonNegIndex& k) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  os << ')';
  return os.str();
}

NonNegIndex index_from_string(const std::string& s) {
  size_t a = s.find('(');
  size_t b = s.rfind(')');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw index_error("index_from_string: expected \"(k1,k2,...)\"");
  NonNegIndex out;
  std::string body = s.substr(a + 1, b - a - 1);
  if (body.find_first_not_of(" \t") == std::string::npos) return out;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t idx = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &idx);
    } catch (const std::exception&) {
      throw index_error("index_from_string: bad entry '" + tok + "'");
    }
    while (idx < tok.size() && std::isspace(static_cast<unsigned char>(tok[idx]))) ++idx;
    if (idx != tok.size())
      throw index_error("index_from_string: bad entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace akzeta
