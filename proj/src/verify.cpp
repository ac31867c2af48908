#include "ncpart/verify.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <variant>

namespace ncpart {

namespace {

// A bucket key holds only the components the formula under test is keyed by.
struct BucketKey {
  std::optional<TypeVector> type;
  std::optional<RankJumpVector> jumps;
  std::optional<long long> d;
  std::optional<bool> annular;
  bool operator==(const BucketKey&) const = default;
  auto operator<=>(const BucketKey&) const = default;
};

RankJumpVector jumps_from_ranks(const std::vector<int>& rk, int maxRank) {
  RankJumpVector s;
  int prev = 0;
  for (int r : rk) {
    s.push_back(r - prev);
    prev = r;
  }
  s.push_back(maxRank - prev);
  return s;
}

// All nonnegative integer vectors of the given length with the given sum.
std::vector<RankJumpVector> compositions(long long total, int parts) {
  std::vector<RankJumpVector> out;
  if (total < 0 || parts < 1) return out;
  RankJumpVector cur;
  std::function<void(int, long long)> rec = [&](int pos, long long rem) {
    if (pos + 1 == parts) {
      cur.push_back(rem);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (long long v = 0; v <= rem; ++v) {
      cur.push_back(v);
      rec(pos + 1, rem - v);
      cur.pop_back();
    }
  };
  rec(0, total);
  return out;
}

// All censuses (c_1..c_len) with sum i*c_i equal to the given weight.
std::vector<TypeVector> censuses_with_weight(int len, long long weight) {
  std::vector<TypeVector> out;
  if (len < 1 || weight < 0) return out;
  std::vector<long long> counts(static_cast<std::size_t>(len), 0);
  std::function<void(int, long long)> rec = [&](int size, long long rem) {
    if (size > len) {
      if (rem == 0) {
        TypeVector tv;
        tv.counts = counts;
        tv.b = std::accumulate(counts.begin(), counts.end(), 0LL);
        out.push_back(std::move(tv));
      }
      return;
    }
    for (long long cnt = 0; cnt * size <= rem; ++cnt) {
      counts[size - 1] = cnt;
      rec(size + 1, rem - cnt * size);
    }
    counts[size - 1] = 0;
  };
  rec(1, weight);
  return out;
}

struct WalkArrays {
  std::vector<int> cls, rank;
  std::vector<char> zero, annular;
  std::vector<std::vector<int>> ups;
  std::vector<TypeVector> classes;
};

WalkArrays prepare(const Family& fam) {
  WalkArrays w;
  const int N = static_cast<int>(fam.size());
  w.cls.resize(N);
  w.rank.resize(N);
  w.zero.resize(N);
  w.annular.resize(N);
  w.ups.resize(N);
  std::map<TypeVector, int> idx;
  for (int i = 0; i < N; ++i) {
    const FamilyElement& e = fam.elems[i];
    if (!e.ktype) throw std::logic_error("verify: family element without a k-type census");
    auto [it, inserted] = idx.try_emplace(*e.ktype, static_cast<int>(w.classes.size()));
    if (inserted) w.classes.push_back(*e.ktype);
    w.cls[i] = it->second;
    w.rank[i] = e.rank;
    w.zero[i] = e.hasZero ? 1 : 0;
    w.annular[i] = e.isAnnular ? 1 : 0;
    for (int j = 0; j < N; ++j)
      if (fam.leq[i][j]) w.ups[i].push_back(j);
  }
  return w;
}

// Walks every ell-multichain once; buckets are keyed by the requested
// components only.  The per-chain signature (bottom class, per-level ranks,
// zero-block index, annular flag) is packed into 64 bits to keep the walk
// cheap, and expanded afterwards.
std::map<BucketKey, BigInt> bucket_chains(const Family& fam, const WalkArrays& w, int ell,
                                          bool useType, bool useJumps, bool useD,
                                          bool useAnnular) {
  if (ell > 9 || fam.maxRank > 31 || w.classes.size() > 1024)
    throw std::runtime_error("verify: case exceeds the packing limits of the chain walk");
  const int N = static_cast<int>(fam.size());
  std::vector<int> all(N);
  std::iota(all.begin(), all.end(), 0);
  std::unordered_map<std::uint64_t, long long> packed;
  std::vector<int> rk(ell);
  int cls0 = 0;
  std::function<void(int, int, int, bool)> rec = [&](int level, int prev, int dSoFar, bool ann) {
    const std::vector<int>& cands = (level == 0) ? all : w.ups[prev];
    for (int j : cands) {
      rk[level] = w.rank[j];
      if (level == 0) cls0 = w.cls[j];
      int d2 = (dSoFar == 0 && w.zero[j]) ? level + 1 : dSoFar;
      bool a2 = ann || w.annular[j];
      if (level + 1 == ell) {
        std::uint64_t key = static_cast<std::uint64_t>(cls0) |
                            (static_cast<std::uint64_t>(d2 == 0 ? ell + 1 : d2) << 10) |
                            (static_cast<std::uint64_t>(a2 ? 1 : 0) << 14);
        for (int t = 0; t < ell; ++t)
          key |= static_cast<std::uint64_t>(rk[t]) << (15 + 5 * t);
        ++packed[key];
      } else {
        rec(level + 1, j, d2, a2);
      }
    }
  };
  rec(0, -1, 0, false);

  std::map<BucketKey, BigInt> buckets;
  for (const auto& [pk, cnt] : packed) {
    BucketKey key;
    if (useType) key.type = w.classes[pk & 1023];
    if (useJumps) {
      std::vector<int> ranks(ell);
      for (int t = 0; t < ell; ++t)
        ranks[t] = static_cast<int>((pk >> (15 + 5 * t)) & 31);
      key.jumps = jumps_from_ranks(ranks, fam.maxRank);
    }
    if (useD) key.d = static_cast<long long>((pk >> 10) & 15);
    if (useAnnular) key.annular = ((pk >> 14) & 1) != 0;
    buckets[key] += cnt;
  }
  return buckets;
}

CountQuery make_query(const FamilySpec& spec, int ell, const BucketKey& key) {
  CountQuery q;
  q.spec = spec;
  q.ell = ell;
  q.jumps = key.jumps;
  q.ktype1 = key.type;
  q.index = key.d;
  q.annularAny = key.annular;
  return q;
}

std::vector<long long> range_to(long long hi) {
  std::vector<long long> out;
  for (long long w = 0; w <= hi; ++w) out.push_back(w);
  return out;
}

}  // namespace

FamilySpec verify_family(FormulaId id, const VerifyCase& c) {
  const int n = static_cast<int>(c.n), k = static_cast<int>(c.k), r = static_cast<int>(c.r);
  switch (id) {
    case FormulaId::EQ1:
    case FormulaId::EQ12:
    case FormulaId::THM_A:
      return FamilySpec{FamilyKind::A, n, k, 0};
    case FormulaId::EQ8:
      return FamilySpec{FamilyKind::A, n, 1, 0};
    case FormulaId::EQ2:
    case FormulaId::EQ13:
    case FormulaId::THM_B:
    case FormulaId::INDEX:
      return FamilySpec{FamilyKind::B, n, k, 0};
    case FormulaId::EQ9:
    case FormulaId::EQ14:
      return FamilySpec{FamilyKind::B, n, 1, 0};
    case FormulaId::EQ7:
    case FormulaId::EQ10:
    case FormulaId::EQ11:
      return FamilySpec{FamilyKind::D, n, 1, 0};
    case FormulaId::THM_D:
    case FormulaId::D_ANNULAR:
      return FamilySpec{FamilyKind::D, n, k, 0};
    case FormulaId::AUG_TYPE:
    case FormulaId::AUG_RANK:
    case FormulaId::AUG_ZETA:
      return FamilySpec{FamilyKind::AugA, n, k, r};
    case FormulaId::TILDE_TYPE:
    case FormulaId::TILDE_RANK:
    case FormulaId::TILDE_ZETA:
      return FamilySpec{FamilyKind::TildeA, 2 * n + 1, 2 * k, 0};
  }
  throw std::invalid_argument("verify_family: unknown formula id");
}

std::vector<CountReport> verify_formula(FormulaId id, const VerifyCase& c) {
  const long long n = c.n, k = c.k, r = c.r;
  const int ell = c.ell;
  if (n < 1 || k < 1 || ell < 1)
    throw std::invalid_argument("verify_formula: need n >= 1, k >= 1, ell >= 1");
  auto need_k1 = [&] {
    if (k != 1) throw std::invalid_argument("verify_formula: this statement fixes k = 1");
  };
  auto need_l1 = [&] {
    if (ell != 1)
      throw std::invalid_argument("verify_formula: this statement counts single elements");
  };

  FormulaParams base;
  base.n = n;
  base.k = k;
  base.r = r;
  base.ell = ell;

  const FamilySpec spec = verify_family(id, c);
  bool useType = false, useJumps = false, useD = false, useAnnular = false;
  std::vector<BucketKey> adm;
  std::function<bool(const BucketKey&)> skip = [](const BucketKey&) { return false; };

  const int len = static_cast<int>(n);
  auto jump_keys = [&](long long total) {
    useJumps = true;
    for (auto& s : compositions(total, ell + 1)) {
      BucketKey key;
      key.jumps = s;
      adm.push_back(std::move(key));
    }
  };
  auto type_keys = [&](const std::vector<long long>& weights) {
    useType = true;
    for (long long wt : weights)
      for (auto& tv : censuses_with_weight(len, wt)) {
        BucketKey key;
        key.type = tv;
        adm.push_back(std::move(key));
      }
  };
  // Keys (type, jumps) with s_1 pinned to n - b and the remaining jumps
  // summing to total - s_1.
  auto type_jump_keys = [&](const std::vector<long long>& weights, long long total,
                            std::optional<bool> annular) {
    useType = useJumps = true;
    if (annular) useAnnular = true;
    for (long long wt : weights)
      for (auto& tv : censuses_with_weight(len, wt)) {
        long long s1 = n - tv.b;
        if (s1 < 0) continue;
        for (auto& tail : compositions(total - s1, ell)) {
          BucketKey key;
          key.type = tv;
          RankJumpVector s;
          s.push_back(s1);
          s.insert(s.end(), tail.begin(), tail.end());
          key.jumps = std::move(s);
          key.annular = annular;
          adm.push_back(std::move(key));
        }
      }
  };

  switch (id) {
    case FormulaId::EQ1:
      jump_keys(n - 1);
      break;
    case FormulaId::EQ2:
      jump_keys(n);
      break;
    case FormulaId::EQ7:
      need_k1();
      jump_keys(n);
      break;
    case FormulaId::EQ8:
      need_k1();
      need_l1();
      type_keys({n});
      break;
    case FormulaId::EQ9:
      need_k1();
      need_l1();
      type_keys(range_to(n));
      break;
    case FormulaId::EQ10:
      need_k1();
      need_l1();
      type_keys(range_to(n - 2));
      skip = [n](const BucketKey& key) { return key.type && key.type->weighted_sum() == n; };
      break;
    case FormulaId::EQ11:
      need_k1();
      need_l1();
      type_keys({n});
      skip = [n](const BucketKey& key) { return key.type && key.type->weighted_sum() <= n - 2; };
      break;
    case FormulaId::EQ12:
      type_keys({n});
      break;
    case FormulaId::EQ13:
      type_keys(range_to(n));
      break;
    case FormulaId::EQ14: {
      need_k1();
      useJumps = useD = true;
      for (auto& s : compositions(n, ell + 1))
        for (long long d = 1; d <= ell + 1; ++d) {
          BucketKey key;
          key.jumps = s;
          key.d = d;
          adm.push_back(std::move(key));
        }
      break;
    }
    case FormulaId::THM_A:
      type_jump_keys({n}, n - 1, std::nullopt);
      break;
    case FormulaId::THM_B:
      type_jump_keys(range_to(n), n, std::nullopt);
      break;
    case FormulaId::THM_D: {
      std::vector<long long> weights = range_to(n - 2);
      weights.push_back(n);
      type_jump_keys(weights, n, std::nullopt);
      break;
    }
    case FormulaId::INDEX: {
      useType = useJumps = useD = true;
      for (long long wt = 0; wt <= n; ++wt)
        for (auto& tv : censuses_with_weight(len, wt)) {
          long long s1 = n - tv.b;
          if (s1 < 0) continue;
          for (auto& tail : compositions(n - s1, ell)) {
            RankJumpVector s;
            s.push_back(s1);
            s.insert(s.end(), tail.begin(), tail.end());
            std::vector<long long> ds;
            if (wt < n)
              ds.push_back(1);
            else
              for (long long d = 2; d <= ell + 1; ++d) ds.push_back(d);
            for (long long d : ds) {
              BucketKey key;
              key.type = tv;
              key.jumps = s;
              key.d = d;
              adm.push_back(std::move(key));
            }
          }
        }
      break;
    }
    case FormulaId::AUG_TYPE:
      type_jump_keys(range_to(n), n, std::nullopt);
      break;
    case FormulaId::AUG_RANK:
      jump_keys(n);
      break;
    case FormulaId::AUG_ZETA:
      adm.push_back(BucketKey{});
      break;
    case FormulaId::TILDE_TYPE:
      type_jump_keys(range_to(n), n, std::nullopt);
      break;
    case FormulaId::TILDE_RANK:
      jump_keys(n);
      break;
    case FormulaId::TILDE_ZETA:
      adm.push_back(BucketKey{});
      break;
    case FormulaId::D_ANNULAR:
      type_jump_keys({n}, n, true);
      skip = [](const BucketKey& key) { return key.annular && !*key.annular; };
      break;
  }

  Family fam = enumerate_family(spec);
  WalkArrays w = prepare(fam);
  std::map<BucketKey, BigInt> buckets =
      bucket_chains(fam, w, ell, useType, useJumps, useD, useAnnular);

  std::vector<CountReport> out;
  std::set<BucketKey> admSet(adm.begin(), adm.end());
  for (const BucketKey& key : adm) {
    CountReport rep;
    rep.query = make_query(spec, ell, key);
    auto it = buckets.find(key);
    rep.brute = (it == buckets.end()) ? BigInt(0) : it->second;
    rep.formulaId = id;
    FormulaParams p = base;
    p.jumps = key.jumps;
    p.type = key.type;
    p.d = key.d;
    rep.formula = eval_formula(id, p);
    rep.match = (*rep.formula == rep.brute);
    out.push_back(std::move(rep));
  }
  for (const auto& [key, cnt] : buckets) {
    if (cnt == 0 || admSet.count(key) || skip(key)) continue;
    CountReport rep;
    rep.query = make_query(spec, ell, key);
    rep.brute = cnt;
    rep.formulaId = id;
    rep.match = false;
    out.push_back(std::move(rep));
  }
  return out;
}

bool all_match(const std::vector<CountReport>& reports) {
  for (const auto& rep : reports)
    if (!rep.match) return false;
  return true;
}

IsoReport armstrong_iso(long long n, long long k) {
  if (n < 1 || k < 1) throw std::invalid_argument("armstrong_iso: need n >= 1 and k >= 1");
  IsoReport rep;
  const int ni = static_cast<int>(n), ki = static_cast<int>(k);
  rep.tildeSpec = FamilySpec{FamilyKind::TildeA, 2 * ni + 1, 2 * ki, 0};
  rep.augSpec = FamilySpec{FamilyKind::AugA, ni, 2 * ki, ki};
  Family tf = enumerate_family(rep.tildeSpec);
  Family af = enumerate_family(rep.augSpec);
  rep.size = tf.size();
  rep.pairing.assign(tf.size(), -1);
  std::map<std::vector<std::vector<int>>, int> augIdx;
  for (std::size_t i = 0; i < af.size(); ++i)
    augIdx[std::get<SetPartition>(af.elems[i].value).blocks] = static_cast<int>(i);
  std::vector<char> used(af.size(), 0);
  bool bij = tf.size() == af.size();
  for (std::size_t i = 0; i < tf.size(); ++i) {
    const SetPartition& pi = std::get<SetPartition>(tf.elems[i].value);
    SetPartition sigma = tilde_to_aug(pi, rep.tildeSpec.k);
    auto it = augIdx.find(sigma.blocks);
    if (it == augIdx.end()) {
      bij = false;
      continue;
    }
    rep.pairing[i] = it->second;
    if (used[it->second]) bij = false;
    used[it->second] = 1;
  }
  rep.bijective = bij;
  if (bij) {
    rep.orderPreserved = true;
    for (std::size_t i = 0; i < tf.size() && rep.orderPreserved; ++i)
      for (std::size_t j = 0; j < tf.size(); ++j)
        if ((tf.leq[i][j] != 0) != (af.leq[rep.pairing[i]][rep.pairing[j]] != 0)) {
          rep.orderPreserved = false;
          break;
        }
    rep.typePreserved = true;
    for (std::size_t i = 0; i < tf.size(); ++i) {
      const FamilyElement& a = tf.elems[i];
      const FamilyElement& b = af.elems[rep.pairing[i]];
      if (a.rank != b.rank || !(a.ktype == b.ktype)) {
        rep.typePreserved = false;
        break;
      }
    }
  }
  rep.ok = rep.bijective && rep.orderPreserved && rep.typePreserved;
  return rep;
}

}  // namespace ncpart
