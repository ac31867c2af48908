#pragma once

#include <optional>
#include <vector>

#include "ncpart/counting.hpp"
#include "ncpart/formulas.hpp"

namespace ncpart {

// One parameter tuple of a verification sweep.
struct VerifyCase {
  long long n = 1;
  long long k = 1;
  long long r = 0;
  int ell = 1;
};

struct CountReport {
  CountQuery query;
  BigInt brute = 0;
  std::optional<BigInt> formula;
  std::optional<FormulaId> formulaId;
  bool match = false;
};

// Exhaustively cross-checks one closed form at one parameter tuple.  Every
// multichain of the relevant family is visited once and bucketed by the
// formula's key (rank jumps, k-type, zero-block index, annular flag, as
// applicable); each admissible key is compared against eval_formula, with
// brute count 0 for keys no chain realizes.  Nonempty buckets outside the
// formula's hypotheses are reported as mismatches with formula = nullopt,
// except keys a sibling statement covers (e.g. the zero-block types of EQ11
// while verifying EQ10), which the formula makes no claim about.
std::vector<CountReport> verify_formula(FormulaId id, const VerifyCase& c);

// The family a formula statement quantifies over at the given parameters
// (e.g. the centrally symmetric statements map (n, k) to the family on
// ground set 2k(2n+1)).
FamilySpec verify_family(FormulaId id, const VerifyCase& c);

bool all_match(const std::vector<CountReport>& reports);

// Certificate for the poset isomorphism between the centrally symmetric
// 2k-divisible family on ground set 2k(2n+1) and the augmented family
// NC^{(2k)}(n; k): checks bijectivity, order preservation both ways, and
// k-type preservation, returning the explicit pairing.
struct IsoReport {
  FamilySpec tildeSpec;
  FamilySpec augSpec;
  std::size_t size = 0;
  std::vector<int> pairing;  // symmetric-family element index -> augmented index
  bool bijective = false;
  bool orderPreserved = false;
  bool typePreserved = false;
  bool ok = false;
};

IsoReport armstrong_iso(long long n, long long k);

}  // namespace ncpart
