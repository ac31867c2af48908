#include "ncpart/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ncpart/bpair.hpp"

namespace ncpart {

int ground_limit() {
  int limit = 16;
  if (const char* env = std::getenv("NCPART_MAX_GROUND")) limit = std::max(limit, std::atoi(env));
  return limit;
}

namespace {

constexpr std::size_t kFamilySizeLimit = 200000;

void check_spec(const FamilySpec& spec) {
  if (spec.n < 1 || spec.k < 1) throw std::invalid_argument("enumerate_family: need n, k >= 1");
  switch (spec.family) {
    case FamilyKind::D:
      if (spec.n < 2) throw std::invalid_argument("enumerate_family: type D needs n >= 2");
      break;
    case FamilyKind::AugA:
      if (!(0 < spec.r && spec.r < spec.k))
        throw std::invalid_argument("enumerate_family: augmented family needs 0 < r < k");
      break;
    case FamilyKind::TildeA:
      if ((spec.n * spec.k) % 2 != 0)
        throw std::invalid_argument(
            "enumerate_family: rotation-invariant family needs an even ground set");
      break;
    default:
      break;
  }
  int g = ground_size(spec);
  if (g > ground_limit())
    throw std::runtime_error("enumerate_family: ground set size " + std::to_string(g) +
                             " exceeds the scale guard (raise NCPART_MAX_GROUND to override)");
}

bool all_divisible(const SetPartition& p, int k) {
  for (const auto& b : p.blocks)
    if (static_cast<int>(b.size()) % k != 0) return false;
  return true;
}

// Census of the k-divisible blocks: counts[i-1] = #blocks of size k*i,
// out to size k*famN; blocks of other sizes are skipped.
TypeVector divisible_census(const SetPartition& p, int k, int famN) {
  TypeVector tv;
  tv.counts.assign(static_cast<std::size_t>(famN), 0);
  for (const auto& b : p.blocks) {
    int sz = static_cast<int>(b.size());
    if (sz % k == 0) {
      ++tv.counts[sz / k - 1];
      ++tv.b;
    }
  }
  return tv;
}

bool leq_elems(const FamilyElement& a, const FamilyElement& b) {
  if (std::holds_alternative<SetPartition>(a.value))
    return refines(std::get<SetPartition>(a.value), std::get<SetPartition>(b.value));
  return refines(std::get<SignedPartition>(a.value), std::get<SignedPartition>(b.value));
}

}  // namespace

int ground_size(const FamilySpec& spec) {
  int g = spec.n * spec.k;
  if (spec.family == FamilyKind::AugA) g += spec.r;
  return g;
}

SetPartition tilde_to_aug(const SetPartition& pi, int k) {
  if (pi.n % 2 != 0) throw std::invalid_argument("tilde_to_aug: ground set must be even");
  if (!all_divisible(pi, k)) throw std::invalid_argument("tilde_to_aug: not k-divisible");
  int m = pi.n / 2;
  std::vector<std::vector<int>> blocks;
  for (const auto& b : pi.blocks) {
    std::vector<int> sb;
    for (int v : b) sb.push_back(v <= m ? v : -(v - m));
    blocks.push_back(std::move(sb));
  }
  return psi(SignedPartition::make(m, std::move(blocks))).sigma;
}

Family enumerate_family(const FamilySpec& spec) {
  check_spec(spec);
  Family fam;
  fam.spec = spec;
  const int n = spec.n, k = spec.k;

  switch (spec.family) {
    case FamilyKind::A: {
      fam.maxRank = n - 1;
      for (auto& p : enumerate_NC(n * k)) {
        if (!all_divisible(p, k)) continue;
        FamilyElement e;
        e.rank = n - p.num_blocks();
        e.ktype = k_type(p, k);
        e.value = std::move(p);
        fam.elems.push_back(std::move(e));
      }
      break;
    }
    case FamilyKind::B: {
      fam.maxRank = n;
      for (auto& p : enumerate_NCB(n * k)) {
        auto kt = k_type(p, k);
        if (!kt) continue;  // some block size not divisible by k
        FamilyElement e;
        e.rank = n - p.nz();
        e.ktype = std::move(kt);
        e.hasZero = p.has_zero();
        e.value = std::move(p);
        fam.elems.push_back(std::move(e));
      }
      break;
    }
    case FamilyKind::D: {
      fam.maxRank = n;
      for (auto& a : enumerate_NCkD(n, k)) {
        FamilyElement e;
        e.rank = n - a.part.nz();
        e.ktype = k_type(a.part, k);
        if (!e.ktype)
          throw std::logic_error("enumerate_family: annulus member with non-divisible block");
        e.hasZero = a.part.has_zero();
        e.isAnnular = !annular_blocks(a).empty();
        e.value = std::move(a.part);
        fam.elems.push_back(std::move(e));
      }
      break;
    }
    case FamilyKind::AugA: {
      fam.maxRank = n;
      for (auto& p : enumerate_NC(n * k + spec.r)) {
        int nondiv = 0;
        for (const auto& b : p.blocks)
          if (static_cast<int>(b.size()) % k != 0) ++nondiv;
        if (nondiv != 1) continue;
        FamilyElement e;
        e.ktype = divisible_census(p, k, n);
        e.rank = n - static_cast<int>(e.ktype->b);
        e.value = std::move(p);
        fam.elems.push_back(std::move(e));
      }
      break;
    }
    case FamilyKind::TildeA: {
      bool odd = (n % 2 == 1);
      int famN = odd ? (n - 1) / 2 : n / 2;
      fam.maxRank = famN;
      for (auto& p : enumerate_NC(n * k)) {
        if (!all_divisible(p, k)) continue;
        if (!(rotate_half(p) == p)) continue;
        FamilyElement e;
        if (odd) {
          SetPartition sigma = tilde_to_aug(p, k);
          e.ktype = divisible_census(sigma, k, famN);
          e.rank = famN - static_cast<int>(e.ktype->b);
        } else {
          int m = (n * k) / 2;
          std::vector<std::vector<int>> blocks;
          for (const auto& b : p.blocks) {
            std::vector<int> sb;
            for (int v : b) sb.push_back(v <= m ? v : -(v - m));
            blocks.push_back(std::move(sb));
          }
          SignedPartition sp = SignedPartition::make(m, std::move(blocks));
          e.ktype = k_type(sp, k);
          e.rank = famN - sp.nz();
          e.hasZero = sp.has_zero();
        }
        e.value = std::move(p);
        fam.elems.push_back(std::move(e));
      }
      break;
    }
  }

  if (fam.elems.size() > kFamilySizeLimit)
    throw std::runtime_error("enumerate_family: family larger than the scale guard");

  std::size_t sz = fam.elems.size();
  fam.leq.assign(sz, std::vector<char>(sz, 0));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j)
      fam.leq[i][j] = leq_elems(fam.elems[i], fam.elems[j]) ? 1 : 0;
  return fam;
}

}  // namespace ncpart
