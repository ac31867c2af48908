#pragma once

#include <optional>
#include <vector>

#include "ncpart/types.hpp"

namespace ncpart {

// Partition of +-[n] = {1, ..., n, -1, ..., -n} closed under negation
// (B in pi implies -B in pi) with at most one self-negating block (the
// "zero block").
//
// Canonical form: the zero block (possibly empty = absent) is stored sorted
// ascending; every non-self-negating pair {B, -B} is stored once via the
// representative containing +a, where a is the smallest absolute value in B,
// sorted ascending; representatives ordered by that smallest absolute value.
struct SignedPartition {
  int n = 0;
  std::vector<std::vector<int>> pairedBlocks;
  std::vector<int> zeroBlock;

  // Builds from a full list of blocks (each element of +-[n] exactly once);
  // validates negation closure and the zero-block uniqueness; throws
  // std::invalid_argument on bad input.
  static SignedPartition make(int n, std::vector<std::vector<int>> allBlocks);

  bool operator==(const SignedPartition&) const = default;
  auto operator<=>(const SignedPartition&) const = default;

  bool has_zero() const { return !zeroBlock.empty(); }
  // Number of unordered nonzero pairs {B, -B}.
  int nz() const { return static_cast<int>(pairedBlocks.size()); }
  // All blocks: rep_1, -rep_1, rep_2, -rep_2, ..., zero block last (if any).
  std::vector<std::vector<int>> all_blocks() const;
  // Full block containing element v (v in +-[n]).
  std::vector<int> block_containing(int v) const;
  bool same_block(int u, int v) const;
};

// Noncrossing on the cycle 1, ..., n, -1, ..., -n.
bool is_noncrossing_B(const SignedPartition& p);

// Noncrossing in the type D circular model (n >= 2): +-1, ..., +-(n-1) on a
// circle, n and -n at the center.  The zero block, if present, must strictly
// contain {n, -n}.
bool is_noncrossing_D(const SignedPartition& p);

bool refines(const SignedPartition& a, const SignedPartition& b);

// (b; b_1..b_n) where b_i = number of unordered pairs {B, -B} of nonzero
// blocks with |B| = i; the zero block is not counted.
TypeVector type_of(const SignedPartition& p);

// If every block size (zero block included) is divisible by k, the pair
// census indexed by multiples of k; otherwise nullopt.
std::optional<TypeVector> k_type(const SignedPartition& p, int k);

// rk(p) = n - nz(p).
int rank_of(const SignedPartition& p);

// All partitions of +-[n] closed under negation with at most one zero block.
std::vector<SignedPartition> enumerate_signed_partitions(int n);

std::vector<SignedPartition> enumerate_NCB(int n);
std::vector<SignedPartition> enumerate_NCD(int n);

}  // namespace ncpart
