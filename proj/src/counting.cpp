#include "ncpart/counting.hpp"

#include <stdexcept>
#include <vector>

namespace ncpart {

namespace {

// Ranks prescribed per level by a jump vector, or empty when unconstrained.
// Returns false when the jump vector cannot be realized at all.
bool prescribed_ranks(const Family& fam, const CountQuery& q, std::vector<long long>& out) {
  out.clear();
  if (!q.jumps) return true;
  if (static_cast<int>(q.jumps->size()) != q.ell + 1)
    throw std::invalid_argument("count_multichains: jump vector must have length ell + 1");
  long long total = 0;
  for (long long s : *q.jumps) {
    if (s < 0) return false;
    total += s;
  }
  if (total != fam.maxRank) return false;
  long long cum = 0;
  for (int i = 0; i < q.ell; ++i) {
    cum += (*q.jumps)[i];
    out.push_back(cum);
  }
  return true;
}

bool level_ok(const FamilyElement& e, const CountQuery& q, int level,
              const std::vector<long long>& ranks, bool forbidAnnular) {
  if (!ranks.empty() && e.rank != ranks[level - 1]) return false;
  if (level == 1 && q.ktype1 && !(e.ktype && *e.ktype == *q.ktype1)) return false;
  if (q.index && e.hasZero != (level >= *q.index)) return false;
  if (forbidAnnular && e.isAnnular) return false;
  return true;
}

BigInt count_with(const Family& fam, const CountQuery& q, bool forbidAnnular) {
  std::vector<long long> ranks;
  if (!prescribed_ranks(fam, q, ranks)) return 0;
  const int N = static_cast<int>(fam.size());
  std::vector<BigInt> cur(N, 0);
  for (int j = 0; j < N; ++j)
    if (level_ok(fam.elems[j], q, 1, ranks, forbidAnnular)) cur[j] = 1;
  for (int level = 2; level <= q.ell; ++level) {
    std::vector<BigInt> next(N, 0);
    for (int i = 0; i < N; ++i) {
      if (cur[i] == 0) continue;
      for (int j = 0; j < N; ++j) {
        if (!fam.leq[i][j]) continue;
        if (!level_ok(fam.elems[j], q, level, ranks, forbidAnnular)) continue;
        next[j] += cur[i];
      }
    }
    cur = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& v : cur) total += v;
  return total;
}

}  // namespace

BigInt count_multichains(const Family& fam, const CountQuery& q) {
  if (!(q.spec == fam.spec))
    throw std::invalid_argument("count_multichains: query family does not match enumerated family");
  if (q.ell < 1) throw std::invalid_argument("count_multichains: ell must be >= 1");
  if (q.index) {
    if (fam.spec.family != FamilyKind::B && fam.spec.family != FamilyKind::D)
      throw std::invalid_argument("count_multichains: zero-block index applies to families B and D only");
    if (*q.index < 1 || *q.index > q.ell + 1)
      throw std::invalid_argument("count_multichains: index must lie in [1, ell + 1]");
  }
  if (q.annularAny && fam.spec.family != FamilyKind::D)
    throw std::invalid_argument("count_multichains: annular filter applies to family D only");
  if (q.jumps && q.ktype1 && !q.jumps->empty()) {
    long long famN = fam.spec.n;
    if (fam.spec.family == FamilyKind::TildeA) famN = fam.spec.n / 2;  // (n-1)/2 when n is odd
    if ((*q.jumps)[0] != famN - q.ktype1->b)
      throw std::invalid_argument(
          "count_multichains: jumps and ktype1 disagree (s_1 must equal n - b)");
  }
  if (q.annularAny && *q.annularAny)
    return count_with(fam, q, false) - count_with(fam, q, true);
  return count_with(fam, q, q.annularAny.has_value() && !*q.annularAny);
}

void for_each_multichain(const Family& fam, int ell,
                         const std::function<void(const std::vector<int>&)>& visit) {
  if (ell < 1) throw std::invalid_argument("for_each_multichain: ell must be >= 1");
  const int N = static_cast<int>(fam.size());
  std::vector<int> chain(ell);
  std::function<void(int)> rec = [&](int level) {
    for (int j = 0; j < N; ++j) {
      if (level > 0 && !fam.leq[chain[level - 1]][j]) continue;
      chain[level] = j;
      if (level + 1 == ell)
        visit(chain);
      else
        rec(level + 1);
    }
  };
  rec(0);
}

BigInt zeta_value(const Family& fam, int ell) {
  CountQuery q;
  q.spec = fam.spec;
  q.ell = ell;
  return count_multichains(fam, q);
}

}  // namespace ncpart
