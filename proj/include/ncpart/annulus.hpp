#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ncpart/paren.hpp"
#include "ncpart/signed_partition.hpp"

namespace ncpart {

// Partition of +-[kn] drawn on an annulus: the "outer" integers
// +-1, ..., +-k(n-1) run clockwise around the outer circle, the "inner"
// integers +-(k(n-1)+1), ..., +-kn counterclockwise around the inner circle.
struct AnnulusPartition {
  int n = 0;  // >= 2
  int k = 1;
  SignedPartition part;  // partition of +-[kn]

  static AnnulusPartition make(int n, int k, SignedPartition part);

  bool operator==(const AnnulusPartition&) const = default;
  auto operator<=>(const AnnulusPartition&) const = default;

  int m() const { return k * (n - 1); }               // outer positives
  int inner_start() const { return k * (n - 1) + 1; }  // first inner positive
};

// Annular parenthesization datum: an ordinary parenthesization of the outer
// word [k(n-1)] (applied symmetrically to both +[k(n-1)] and -[k(n-1)]),
// plus, for each unmatched right parenthesis at position x, the number
// f(x) >= 1 of inner integers its block picks up.
struct DParenState {
  int n = 0;
  int k = 1;
  ParenState paren;      // on [k(n-1)]
  std::map<int, int> f;  // position of unmatched right -> inner count

  static DParenState make(int n, int k, ParenState paren, std::map<int, int> f);

  bool operator==(const DParenState&) const = default;
  auto operator<=>(const DParenState&) const = default;
};

// Membership in P^{(k)}_D(n, l): matched blocks have k-divisible sizes, a
// fully matched datum has a free integer, an unmatched datum has sum f = k
// and k-divisible unmatched sizes (f(x) plus the free integers since the
// previous unmatched paren).
bool in_PkD(const DParenState& p);

// in_PkD and |L| < sum |R_i|.
bool in_PkD_bar(const DParenState& p);

// Nonzero blocks meeting both circles (both signs listed, elements sorted).
std::vector<std::vector<int>> annular_blocks(const AnnulusPartition& pi);

// tau_D with all labels pooled: the set of partitions (one or two) drawable
// with exactly these parentheses.  A two-element result lists pi^+ (inner
// chunks taken counterclockwise from the positive start) before pi^-.
// Also accepts the fully-matched, no-free-integer data that arise from
// partitions with a pure-inner block pair, where the inner pair is forced.
std::vector<AnnulusPartition> tau_D(const DParenState& p);

bool is_member_NCkD(const AnnulusPartition& pi);

// The unique datum (L, R, f) with pi in tau_D(L, R, f); throws
// std::invalid_argument if pi is not in NC^{(k)}_D(n).
DParenState find_dparen(const AnnulusPartition& pi);

// tau'_D: a datum with l labels plus a sign eps (+1 or -1) maps to the
// multichain pi_1 <= ... <= pi_l, where level i applies tau_D to the pooled
// remaining parens and then deletes the rights labeled i (matched lefts go
// with them; f-values of deleted unmatched rights fold onto the next
// surviving unmatched right in cyclic order).  eps picks the element of the
// first two-element tau_D value; later two-element values are resolved by
// refinement.
std::vector<AnnulusPartition> tau_D_prime(const DParenState& p, int eps);

// Inverse of tau'_D on multichains with at least one annular level.
std::pair<DParenState, int> tau_D_prime_inv(const std::vector<AnnulusPartition>& chain);

// All of NC^{(k)}_D(n) (brute force; small kn only).
std::vector<AnnulusPartition> enumerate_NCkD(int n, int k);

}  // namespace ncpart
