#pragma once

#include <functional>
#include <optional>

#include "ncpart/bigint.hpp"
#include "ncpart/families.hpp"

namespace ncpart {

// A filtered multichain count over one of the partition families.
//
// The object counted is a multichain pi_1 <= ... <= pi_ell in the family's
// refinement order.  Optional filters:
//   * jumps: rank-jump vector (s_1, ..., s_{ell+1}) with s_1 = rank(pi_1),
//     s_i = rank(pi_i) - rank(pi_{i-1}), and s_{ell+1} = maxRank - rank(pi_ell).
//   * ktype1: the k-type census of the bottom element pi_1.
//   * index: smallest level whose element has a zero block, with ell + 1
//     meaning no level does (families B and D only).
//   * annularAny: whether some level has an annular block (family D only).
struct CountQuery {
  FamilySpec spec;
  int ell = 1;
  std::optional<RankJumpVector> jumps;
  std::optional<TypeVector> ktype1;
  std::optional<long long> index;
  std::optional<bool> annularAny;
};

// Counts multichains in fam matching q.  Throws std::invalid_argument when the
// query is malformed (wrong family, bad lengths, filters that do not apply to
// the family); returns 0 for well-formed queries nothing matches.
BigInt count_multichains(const Family& fam, const CountQuery& q);

// Visits every multichain of length ell once, as the vector of element
// indices (chain[0] <= ... <= chain[ell-1] in the family order).
void for_each_multichain(const Family& fam, int ell,
                         const std::function<void(const std::vector<int>&)>& visit);

// Number of unfiltered multichains of length ell: the zeta polynomial of the
// family's poset evaluated at ell + 1.
BigInt zeta_value(const Family& fam, int ell);

}  // namespace ncpart
