#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "akzeta/rational.hpp"

namespace akzeta {

// Multi-indices are plain int sequences; the distinction between a positive
// index (every entry >= 1, the usual k) and a non-negative one (e, j in
// summation domains) is carried by the operations' preconditions, not the
// type system. Empty sequences are legal everywhere and denote the empty
// index.
using Index = std::vector<int>;
using NonNegIndex = std::vector<int>;

struct index_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Block decomposition of a positive index:
//   k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_n-1}, b_n+1)
// with a_i >= 1, b_i >= 1 for i < n and b_n >= 0 (b_n = 0 encodes a trailing
// run of ones, i.e. a non-admissible index).
struct Block {
  int a = 1;
  int b = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockForm {
  std::vector<Block> blocks;
  int count() const { return static_cast<int>(blocks.size()); }
  friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

long long weight(const NonNegIndex& e);
int depth(const NonNegIndex& e);
bool is_admissible(const Index& k);
bool is_positive_index(const Index& k);

BlockForm to_blocks(const Index& k);
Index from_blocks(const BlockForm& bf);

// Drop a trailing 1 or decrement a final entry >= 2. Errors on the empty
// index.
Index k_minus(const Index& k);

// Increment the final entry. Errors on the empty index.
NonNegIndex e_plus(const NonNegIndex& e);

// Entrywise sum; depths must agree.
Index add(const Index& k, const NonNegIndex& e);

// The dagger involution on admissible indices, via blocks:
//   [(a_1,b_1),...,(a_n,b_n)] -> [(b_n,a_n),...,(b_1,a_1)].
Index dual(const Index& k);

// Hoffman's dual: transpose commas and plus signs in the all-ones expansion.
// Defined for non-empty positive indices, plus the convention that a single
// leading 0 contributes an empty run ((0) -> empty index).
Index hoffman_dual(const Index& k);

// Block slices: blocks i+1..j of k, so slice(k,0,j) is the head k_j and
// slice(k,i,n) the tail k^i. slice(k,i,i) is empty.
Index slice(const Index& k, int i, int j);
Index head_blocks(const Index& k, int j);
Index tail_blocks(const Index& k, int i);

// Reversal: blocks emitted back to front, each mirrored to (b_i+1, {1}^{a_i-1}).
Index reverse_blocks(const Index& k);

// All non-negative indices of weight w and depth d, in colexicographic
// order. d = 0 yields {empty} when w = 0 and nothing otherwise.
std::vector<NonNegIndex> compositions(int w, int d);

// b(k; e) = prod_i C(k_i + e_i - 1, e_i); depths must agree.
Integer binom_b(const Index& k, const NonNegIndex& e);

// Canonical text form "(k1,k2,...)", "()" for the empty index.
std::string index_to_string(const NonNegIndex& k);
NonNegIndex index_from_string(const std::string& s);

}  // namespace akzeta
