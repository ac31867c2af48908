#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace ncpart {

// Block-size census (b; b_1, ..., b_n): `b` blocks total, b_i of size i.
// For signed families b_i counts unordered pairs {B, -B} of nonzero blocks
// with |B| = i, and the zero block (if any) is not counted.
struct TypeVector {
  long long b = 0;
  std::vector<long long> counts;  // counts[i-1] = b_i

  bool operator==(const TypeVector&) const = default;
  auto operator<=>(const TypeVector&) const = default;

  long long weighted_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
      s += static_cast<long long>(i + 1) * counts[i];
    return s;
  }
  long long count_sum() const {
    long long s = 0;
    for (long long c : counts) s += c;
    return s;
  }
  bool consistent() const {
    if (b != count_sum()) return false;
    for (long long c : counts)
      if (c < 0) return false;
    return true;
  }
};

// Rank-jump vector (s_1, ..., s_{l+1}) of a multichain pi_1 <= ... <= pi_l:
// s_1 = rk(pi_1), s_i = rk(pi_i) - rk(pi_{i-1}), s_{l+1} = rk(max) - rk(pi_l).
using RankJumpVector = std::vector<long long>;

// Edge (i, j): i < j in the same block with no block element strictly
// between them.
struct Edge {
  int i = 0;
  int j = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

enum class FamilyKind { A, B, D, AugA, TildeA };

// Parameters selecting one concrete poset/family:
//   A:      NC^(k)(n), k-divisible noncrossing partitions of [kn]
//   B:      NC_B^(k)(n), type-B analogue on +-[kn]
//   D:      NC_D^(k)(n), annulus model (k = 1 reduces to the circular model)
//   AugA:   NC^(k)(n; r), augmented k-divisible with remainder 0 < r < k
//   TildeA: ~NC^(k)(n), 180-degree-rotation-invariant elements of NC^(k)(n)
struct FamilySpec {
  FamilyKind family = FamilyKind::A;
  int n = 0;
  int k = 1;
  int r = 0;  // only for AugA

  bool operator==(const FamilySpec&) const = default;
};

std::string family_name(FamilyKind kind);

}  // namespace ncpart
