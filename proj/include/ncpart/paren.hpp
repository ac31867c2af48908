#pragma once

#include <utility>
#include <vector>

#include "ncpart/bigint.hpp"
#include "ncpart/set_partition.hpp"

namespace ncpart {

// Cyclic parenthesization datum (L, R_1, ..., R_l) on the cyclic word
// 1, 2, ..., n: a left parenthesis before each i in L, a right parenthesis
// labeled j after each i in R_j (several labels may sit on one position,
// ordered by increasing label outward).  |L| need not equal sum |R_j| here;
// the P(n, l) membership test is separate so that annulus data (which have
// |L| < |R|) can reuse the machinery.
struct ParenState {
  int n = 0;
  std::vector<int> L;                // sorted, distinct
  std::vector<std::vector<int>> Rs;  // Rs[j-1] = positions of rights labeled j

  static ParenState make(int n, std::vector<int> L, std::vector<std::vector<int>> Rs);

  bool operator==(const ParenState&) const = default;
  auto operator<=>(const ParenState&) const = default;

  int ell() const { return static_cast<int>(Rs.size()); }
  long long total_rights() const;
  bool in_P() const;  // |L| == sum |R_j|
};

// One matched pair of parentheses: the left sits before integer `lpos`, the
// right (labeled `label`) after integer `rpos`; `block` is the set of
// integers enclosed by the pair but by no nested pair.
struct MatchedPair {
  int lpos = 0;
  int rpos = 0;
  int label = 0;
  std::vector<int> block;
};

struct Matching {
  std::vector<MatchedPair> pairs;
  std::vector<int> free_integers;                    // enclosed by no pair
  std::vector<std::pair<int, int>> unmatched_rights; // (pos, label)
  std::vector<int> unmatched_lefts;
};

// Cyclic innermost-first matching: repeatedly match each left parenthesis
// whose next unconsumed parenthesis token in cyclic order is a right.
Matching match_parens(const ParenState& p);

// Type (b; b_1..b_n): b_j = number of matched pairs whose block has size j.
// Requires every paren matched.
TypeVector paren_type(const ParenState& p);

// Whether p lies in P-bar(n, l): in P(n, l) and at least one free integer.
bool in_Pbar(const ParenState& p);

// tau: P-bar(n, 1) -> (B, pi); blocks from matched pairs, B = free integers.
std::pair<std::vector<int>, SetPartition> tau(const ParenState& p);

// tau^{-1}(B, pi): peel cyclically consecutive blocks != B; left before the
// first, right after the last integer of the peeled run.
ParenState tau_inv(const std::vector<int>& B, const SetPartition& pi);

// tau': P-bar(n, l) -> (B, pi_1 <= ... <= pi_l); level i applies tau to the
// pooled remaining parens, then deletes rights labeled i and their lefts.
std::pair<std::vector<int>, std::vector<SetPartition>> tau_prime(const ParenState& p);

// Inverse of tau': level l gives tau_inv(B_l, pi_l) labeled l; going down,
// pairs of tau_inv(B_i, pi_i) whose left is new are added with label i
// (B_i = block of pi_i containing B).
ParenState tau_prime_inv(const std::vector<int>& B, const std::vector<SetPartition>& chain);

// Number of elements of P(n, l) with the given type and |R_i| = c_i:
// multinomial(b; b_1..b_n) * prod_i C(n, c_i), zero unless
// sum b_i = b = sum c_i.
BigInt count_paren_by_type(int n, const TypeVector& type, const std::vector<long long>& c);

// All elements of P(n, l) (brute force; small n only).
std::vector<ParenState> enumerate_P(int n, int ell);

}  // namespace ncpart
