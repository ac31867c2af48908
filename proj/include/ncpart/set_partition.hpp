#pragma once

#include <optional>
#include <vector>

#include "ncpart/types.hpp"

namespace ncpart {

// Partition of [n] = {1, ..., n} into disjoint nonempty blocks.
// Canonical form: each block sorted ascending; blocks ordered by minimum.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  // Canonicalizes and validates (throws std::invalid_argument on bad input).
  static SetPartition make(int n, std::vector<std::vector<int>> blocks);

  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  // Index into `blocks` of the block containing i (1 <= i <= n).
  int block_index(int i) const;
  const std::vector<int>& block_containing(int i) const {
    return blocks[block_index(i)];
  }
  bool same_block(int i, int j) const { return block_index(i) == block_index(j); }
};

// Noncrossing on the cycle 1, 2, ..., n (equivalently on the line).
bool is_noncrossing_A(const SetPartition& p);

// Every block of `a` is contained in a block of `b`.
bool refines(const SetPartition& a, const SetPartition& b);

// Census (b; b_1..b_n) of block sizes.
TypeVector type_of(const SetPartition& p);

// If every block size is divisible by k, the census indexed by multiples:
// entry j counts blocks of size k*j (vector length n when p.n = k*n).
// Otherwise nullopt.
std::optional<TypeVector> k_type(const SetPartition& p, int k);

// rk(p) = n - #blocks, the rank in the noncrossing partition lattice order.
int rank_of(const SetPartition& p);

// Image under i -> i + n/2 (mod n, 1-based); requires n even.
SetPartition rotate_half(const SetPartition& p);

// All edges: consecutive elements within each block.
std::vector<Edge> edges(const SetPartition& p);

// All noncrossing partitions of [n].
std::vector<SetPartition> enumerate_NC(int n);

// All set partitions of [n] (for brute-force oracles; n small).
std::vector<SetPartition> enumerate_all_partitions(int n);

}  // namespace ncpart
