#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ncpart/annulus.hpp"
#include "ncpart/set_partition.hpp"
#include "ncpart/signed_partition.hpp"
#include "ncpart/types.hpp"

namespace ncpart {

// One element of an enumerated family with its precomputed attributes.
// rank is the family's own grading (jump vectors sum to maxRank);
// ktype is the k-type census when defined for the family.
struct FamilyElement {
  std::variant<SetPartition, SignedPartition> value;
  int rank = 0;
  std::optional<TypeVector> ktype;
  bool hasZero = false;   // B, D: a zero block is present
  bool isAnnular = false; // D: some nonzero block meets both circles
};

// An enumerated family together with its order relation.
struct Family {
  FamilySpec spec;
  int maxRank = 0;
  std::vector<FamilyElement> elems;
  std::vector<std::vector<char>> leq;  // leq[i][j]: elems[i] <= elems[j]

  std::size_t size() const { return elems.size(); }
};

// Ground-set size (number of positive integers) for scale guards.
int ground_size(const FamilySpec& spec);

// Current ground-set scale guard: 16, raised by the NCPART_MAX_GROUND
// environment variable.
int ground_limit();

// Enumerates the family in canonical order and precomputes ranks, k-types,
// flags, and the comparability matrix.  Throws std::invalid_argument on a
// bad spec and std::runtime_error when a scale guard trips (override with
// the NCPART_MAX_GROUND environment variable).
Family enumerate_family(const FamilySpec& spec);

// The order isomorphism image of a rotation-symmetric k-divisible partition
// (k even, pi.n == k * (odd integer)): view pi on +-[kn/2], apply psi, and
// return the augmented partition.
SetPartition tilde_to_aug(const SetPartition& pi, int k);

}  // namespace ncpart
