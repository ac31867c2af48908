#pragma once

#include <optional>
#include <string>

#include "ncpart/bigint.hpp"
#include "ncpart/types.hpp"

namespace ncpart {

// One identifier per implemented closed form.  EQ<i> are the numbered
// displayed equations; THM_A/B/D the three multichain theorems refined by
// rank jumps and k-type; INDEX the zero-block-index lemma; AUG_*/TILDE_*
// the augmented and rotation-invariant families; D_ANNULAR the count of
// multichains with at least one annular level.
enum class FormulaId {
  EQ1,
  EQ2,
  EQ7,
  EQ8,
  EQ9,
  EQ10,
  EQ11,
  EQ12,
  EQ13,
  EQ14,
  THM_A,
  THM_B,
  THM_D,
  INDEX,
  AUG_TYPE,
  AUG_RANK,
  AUG_ZETA,
  TILDE_TYPE,
  TILDE_RANK,
  TILDE_ZETA,
  D_ANNULAR,
};

std::optional<FormulaId> parse_formula_id(const std::string& name);
std::string formula_id_name(FormulaId id);
// Every FormulaId in a fixed order (for sweeps and listings).
const std::vector<FormulaId>& all_formula_ids();

// Parameters for eval_formula.  n, k (and r for the augmented family) are
// the family parameters; for TILDE_* they are the small parameters (N, K)
// of ~NC^{(2K)}(2N+1).  jumps must have length ell+1 when required; type is
// the k-type census; d is the zero-block index (1..ell+1).
struct FormulaParams {
  long long n = 0;
  long long k = 1;
  long long r = 0;
  int ell = 1;
  std::optional<RankJumpVector> jumps;
  std::optional<TypeVector> type;
  std::optional<long long> d;
};

// Exact value of the closed form.  Hypothesis checking is strict: throws
// std::invalid_argument naming the violated condition instead of returning
// a number outside a statement's domain.
BigInt eval_formula(FormulaId id, const FormulaParams& p);

}  // namespace ncpart
