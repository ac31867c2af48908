#pragma once

#include <vector>

#include "ncpart/set_partition.hpp"
#include "ncpart/signed_partition.hpp"

namespace ncpart {

// Distinguished datum accompanying sigma: nothing, an edge of sigma, or a
// block of sigma (named by its minimum element).
struct XPart {
  enum class Kind { Empty, EdgeX, BlockX };
  Kind kind = Kind::Empty;
  Edge edge{};       // meaningful when kind == EdgeX
  int blockMin = 0;  // meaningful when kind == BlockX

  bool operator==(const XPart&) const = default;
  auto operator<=>(const XPart&) const = default;

  static XPart empty() { return XPart{}; }
  static XPart make_edge(int i, int j) { return XPart{Kind::EdgeX, Edge{i, j}, 0}; }
  static XPart make_block(int blockMin) { return XPart{Kind::BlockX, Edge{}, blockMin}; }
};

struct BPair {
  SetPartition sigma;
  XPart x;
  bool operator==(const BPair&) const = default;
  auto operator<=>(const BPair&) const = default;
};

// Bijection NC_B(n) -> pairs (sigma, x): drop signs, then re-merge the
// blocks that mixed with negatives in symmetric fashion.
BPair psi(const SignedPartition& pi);

// Inverse: split each block of sigma across the edge / block window of x.
// Validates that x is an edge/block of sigma.
SignedPartition psi_inv(const BPair& bp);

// Independent characterization of the x-part from same-block queries:
//   Empty iff no i ~ -j; EdgeX iff some i ~ -j but no i ~ -i (the unique
//   minimal-length such pair); BlockX iff some i ~ -i.
XPart classify_x(const SignedPartition& pi);

// Order transfer: psi_inv(p1) <= psi_inv(p2) in NC_B(n).
bool leq_pairs(const BPair& p1, const BPair& p2);

// All pairs (sigma, x) with sigma in NC(n) and x empty, an edge, or a block.
std::vector<BPair> enumerate_bpairs(int n);

}  // namespace ncpart
