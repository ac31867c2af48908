// Acceptance suite: nine end-to-end checks, one PASS/FAIL line each.
// Exit status is the number of failed checks.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ncpart/annulus.hpp"
#include "ncpart/bigint.hpp"
#include "ncpart/bpair.hpp"
#include "ncpart/counting.hpp"
#include "ncpart/families.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/json_io.hpp"
#include "ncpart/paren.hpp"
#include "ncpart/set_partition.hpp"
#include "ncpart/signed_partition.hpp"
#include "ncpart/verify.hpp"

using namespace ncpart;

namespace {

bool sweep(FormulaId id, const VerifyCase& c, std::string& detail) {
  std::vector<CountReport> reports = verify_formula(id, c);
  for (const CountReport& rep : reports)
    if (!rep.match) {
      detail = csv_row(rep);
      return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// 1. Family cardinalities.
bool criterion1(std::string& detail) {
  for (int n = 1; n <= 10; ++n)
    if (BigInt(enumerate_NC(n).size()) != catalan(n)) {
      detail = "|NC(" + std::to_string(n) + ")| != Catalan";
      return false;
    }
  for (int n = 1; n <= 6; ++n) {
    long long cnt = 0;
    for (const SignedPartition& p : enumerate_signed_partitions(n))
      if (is_noncrossing_B(p)) ++cnt;
    if (BigInt(cnt) != binomial(2 * n, n)) {
      detail = "|NC_B(" + std::to_string(n) + ")| != C(2n, n)";
      return false;
    }
  }
  for (int n = 2; n <= 5; ++n) {
    long long cnt = 0;
    for (const SignedPartition& p : enumerate_signed_partitions(n))
      if (is_noncrossing_D(p)) ++cnt;
    BigInt sum = 0;
    for (long long s = 0; s <= n; ++s) {
      FormulaParams fp;
      fp.n = n;
      fp.k = 1;
      fp.ell = 1;
      fp.jumps = RankJumpVector{s, n - s};
      sum += eval_formula(FormulaId::EQ7, fp);
    }
    if (BigInt(cnt) != sum) {
      detail = "|NC_D(" + std::to_string(n) + ")| != jump-vector sum";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2. Refined type A multichain counts.
bool criterion2(std::string& detail) {
  for (long long k = 1; k <= 8; ++k)
    for (long long n = 1; k * n <= 8; ++n)
      for (int ell = 1; ell <= 3; ++ell)
        if (!sweep(FormulaId::THM_A, VerifyCase{n, k, 0, ell}, detail))
          return false;
  return true;
}

// ---------------------------------------------------------------------------
// 3. Refined type B multichain counts and the zero-block index split.
bool criterion3(std::string& detail) {
  for (long long k = 1; k <= 5; ++k)
    for (long long n = 1; k * n <= 5; ++n)
      for (int ell = 1; ell <= 3; ++ell) {
        if (!sweep(FormulaId::THM_B, VerifyCase{n, k, 0, ell}, detail))
          return false;
        if (!sweep(FormulaId::INDEX, VerifyCase{n, k, 0, ell}, detail))
          return false;
      }
  // The k = 1 specialization of the index split, checked in its own form.
  for (long long n = 1; n <= 5; ++n)
    for (int ell = 1; ell <= 3; ++ell)
      if (!sweep(FormulaId::EQ14, VerifyCase{n, 1, 0, ell}, detail))
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// 4. Refined type D multichain counts and the annular split.
bool criterion4(std::string& detail) {
  const std::array<std::array<int, 3>, 6> cases = {
      {{3, 1, 1}, {3, 1, 2}, {4, 1, 1}, {4, 1, 2}, {2, 2, 1}, {3, 2, 1}}};
  for (const auto& c : cases) {
    VerifyCase vc{c[0], c[1], 0, c[2]};
    if (!sweep(FormulaId::THM_D, vc, detail)) return false;
    if (!sweep(FormulaId::D_ANNULAR, vc, detail)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. Bijection round-trips.
bool psi_roundtrips(std::string& detail) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<SignedPartition> ncb;
    for (const SignedPartition& p : enumerate_signed_partitions(n))
      if (is_noncrossing_B(p)) ncb.push_back(p);
    std::set<BPair> images;
    for (const SignedPartition& p : ncb) {
      BPair bp = psi(p);
      if (!(psi_inv(bp) == p) || !images.insert(bp).second) {
        detail = "psi round-trip failed at n = " + std::to_string(n);
        return false;
      }
    }
    std::vector<BPair> pairs = enumerate_bpairs(n);
    if (pairs.size() != ncb.size()) {
      detail = "pair count mismatch at n = " + std::to_string(n);
      return false;
    }
    for (const BPair& bp : pairs)
      if (!(psi(psi_inv(bp)) == bp)) {
        detail = "psi_inv round-trip failed at n = " + std::to_string(n);
        return false;
      }
    for (const SignedPartition& a : ncb)
      for (const SignedPartition& b : ncb)
        if (leq_pairs(psi(a), psi(b)) != refines(a, b)) {
          detail = "order transfer failed at n = " + std::to_string(n);
          return false;
        }
  }
  return true;
}

bool tau_roundtrips(std::string& detail) {
  for (int n = 1; n <= 5; ++n)
    for (int ell = 1; ell <= 3; ++ell) {
      long long seen = 0;
      for (const ParenState& p : enumerate_P(n, ell)) {
        if (!in_Pbar(p)) continue;
        ++seen;
        auto [B, chain] = tau_prime(p);
        if (!(tau_prime_inv(B, chain) == p)) {
          detail = "tau' round-trip failed at n = " + std::to_string(n) +
                   ", ell = " + std::to_string(ell);
          return false;
        }
        if (ell == 1) {
          auto [B1, pi1] = tau(p);
          if (!(B1 == B) || !(pi1 == chain[0]) || !(tau_inv(B1, pi1) == p)) {
            detail = "tau disagrees with tau' at n = " + std::to_string(n);
            return false;
          }
        }
      }
      // Image side: every multichain with a marked bottom block arises once.
      std::vector<SetPartition> nc = enumerate_NC(n);
      long long pairs = 0;
      bool ok = true;
      std::vector<int> idx(static_cast<std::size_t>(ell), 0);
      std::function<void(int)> walk = [&](int depth) {
        if (!ok) return;
        if (depth == ell) {
          std::vector<SetPartition> chain;
          for (int i : idx) chain.push_back(nc[static_cast<std::size_t>(i)]);
          for (const auto& B : chain[0].blocks) {
            ParenState p = tau_prime_inv(B, chain);
            auto [B2, chain2] = tau_prime(p);
            ok = ok && B2 == B && chain2 == chain;
            ++pairs;
          }
          return;
        }
        for (int j = 0; j < static_cast<int>(nc.size()); ++j) {
          if (depth > 0 &&
              !refines(nc[static_cast<std::size_t>(idx[static_cast<std::size_t>(depth - 1)])],
                       nc[static_cast<std::size_t>(j)]))
            continue;
          idx[static_cast<std::size_t>(depth)] = j;
          walk(depth + 1);
        }
      };
      walk(0);
      if (!ok || pairs != seen) {
        detail = "tau' image sweep failed at n = " + std::to_string(n) +
                 ", ell = " + std::to_string(ell);
        return false;
      }
    }
  return true;
}

bool tau_D_roundtrips(std::string& detail) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {2, 2}}) {
    std::size_t covered = 0;
    std::set<DParenState> data;
    for (const AnnulusPartition& pi : enumerate_NCkD(n, k)) {
      DParenState d = find_dparen(pi);
      std::vector<AnnulusPartition> img = tau_D(d);
      if (std::count(img.begin(), img.end(), pi) != 1) {
        detail = "tau_D does not recover its datum's partition";
        return false;
      }
      for (const AnnulusPartition& q : img)
        if (!(find_dparen(q) == d)) {
          detail = "find_dparen is not constant on a tau_D image";
          return false;
        }
      data.insert(d);
    }
    for (const DParenState& d : data) covered += tau_D(d).size();
    if (covered != enumerate_NCkD(n, k).size()) {
      detail = "tau_D images do not cover the family once";
      return false;
    }
  }
  return true;
}

bool tau_D_prime_roundtrips(std::string& detail) {
  for (auto [n, k, ell] :
       std::vector<std::array<int, 3>>{{3, 1, 1}, {3, 1, 2}, {2, 2, 1}}) {
    std::vector<AnnulusPartition> fam = enumerate_NCkD(n, k);
    const int sz = static_cast<int>(fam.size());
    std::set<std::pair<DParenState, int>> seenData;
    bool ok = true;
    std::vector<int> idx(static_cast<std::size_t>(ell), 0);
    std::function<void(int)> walk = [&](int depth) {
      if (!ok) return;
      if (depth == ell) {
        std::vector<AnnulusPartition> chain;
        bool annular = false;
        for (int i : idx) {
          chain.push_back(fam[static_cast<std::size_t>(i)]);
          annular = annular || !annular_blocks(chain.back()).empty();
        }
        if (!annular) return;
        auto [p, eps] = tau_D_prime_inv(chain);
        ok = ok && tau_D_prime(p, eps) == chain && seenData.insert({p, eps}).second;
        return;
      }
      for (int j = 0; j < sz; ++j) {
        if (depth > 0 &&
            !refines(fam[static_cast<std::size_t>(idx[static_cast<std::size_t>(depth - 1)])].part,
                     fam[static_cast<std::size_t>(j)].part))
          continue;
        idx[static_cast<std::size_t>(depth)] = j;
        walk(depth + 1);
      }
    };
    walk(0);
    if (!ok || seenData.empty()) {
      detail = "tau_D' sweep failed at (n, k, ell) = (" + std::to_string(n) +
               ", " + std::to_string(k) + ", " + std::to_string(ell) + ")";
      return false;
    }
  }
  return true;
}

bool criterion5(std::string& detail) {
  return psi_roundtrips(detail) && tau_roundtrips(detail) &&
         tau_D_roundtrips(detail) && tau_D_prime_roundtrips(detail);
}

// ---------------------------------------------------------------------------
// 6. Augmented family counts.
bool criterion6(std::string& detail) {
  for (long long n = 1; n <= 3; ++n)
    for (long long k = 2; k <= 3; ++k)
      for (long long r = 1; r < k; ++r)
        for (int ell = 1; ell <= 4; ++ell)
          for (FormulaId id : {FormulaId::AUG_TYPE, FormulaId::AUG_RANK,
                               FormulaId::AUG_ZETA})
            if (!sweep(id, VerifyCase{n, k, r, ell}, detail)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// 7. Rotation-invariant / augmented isomorphism and its chain counts.
bool criterion7(std::string& detail) {
  for (auto [n, k] : std::vector<std::pair<long long, long long>>{
           {1, 1}, {2, 1}, {1, 2}}) {
    IsoReport rep = armstrong_iso(n, k);
    if (!rep.ok) {
      detail = "isomorphism certificate failed at (n, k) = (" +
               std::to_string(n) + ", " + std::to_string(k) + ")";
      return false;
    }
  }
  if (zeta_value(enumerate_family(FamilySpec{FamilyKind::TildeA, 3, 2, 0}), 1) != 4 ||
      zeta_value(enumerate_family(FamilySpec{FamilyKind::TildeA, 5, 2, 0}), 1) != 21) {
    detail = "rotation-invariant family sizes off";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Single-family type censuses.
bool criterion8(std::string& detail) {
  for (long long n = 1; n <= 6; ++n)
    if (!sweep(FormulaId::EQ8, VerifyCase{n, 1, 0, 1}, detail)) return false;
  for (long long n = 1; n <= 5; ++n)
    if (!sweep(FormulaId::EQ9, VerifyCase{n, 1, 0, 1}, detail)) return false;
  for (long long n = 2; n <= 5; ++n) {
    if (!sweep(FormulaId::EQ10, VerifyCase{n, 1, 0, 1}, detail)) return false;
    if (!sweep(FormulaId::EQ11, VerifyCase{n, 1, 0, 1}, detail)) return false;
  }
  for (int ell = 1; ell <= 2; ++ell) {
    for (long long n = 1; n <= 6; ++n)
      if (!sweep(FormulaId::EQ12, VerifyCase{n, 1, 0, ell}, detail)) return false;
    for (long long n = 1; n <= 5; ++n)
      if (!sweep(FormulaId::EQ13, VerifyCase{n, 1, 0, ell}, detail)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 9. The annulus model at k = 1 agrees with the circular type D model.
bool criterion9(std::string& detail) {
  for (int n = 2; n <= 5; ++n)
    for (const SignedPartition& p : enumerate_signed_partitions(n))
      if (is_member_NCkD(AnnulusPartition::make(n, 1, p)) != is_noncrossing_D(p)) {
        detail = "model disagreement at n = " + std::to_string(n);
        return false;
      }
  return true;
}

struct Criterion {
  int num;
  const char* what;
  double budget;  // seconds
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "family cardinalities (A <= 10, B <= 6, D <= 5)", 10, criterion1},
      {2, "type A multichain counts by jumps and bottom type (kn <= 8, ell <= 3)", 60, criterion2},
      {3, "type B multichain counts and zero-block index split (kn <= 5, ell <= 3)", 60, criterion3},
      {4, "type D multichain counts, both cases, and annular split", 120, criterion4},
      {5, "bijection round-trips (psi, tau, tau', tau_D, tau_D')", 60, criterion5},
      {6, "augmented counts by type, rank, and chain number (n,k <= 3, ell <= 4)", 30, criterion6},
      {7, "rotation-invariant/augmented isomorphism certificates", 30, criterion7},
      {8, "block-size census counts (A n <= 6, B n <= 5, D n <= 5)", 30, criterion8},
      {9, "annulus model at k = 1 matches the circular model (n <= 5)", 10, criterion9},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.budget) {
      ok = false;
      detail = "over time budget";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.num << ": " << c.what
              << " [" << buf << " s, budget " << c.budget << " s]" << std::endl;
    if (!ok) {
      ++failures;
      if (!detail.empty()) std::cout << "     detail: " << detail << std::endl;
    }
  }
  if (failures == 0)
    std::cout << "All 9 acceptance criteria passed." << std::endl;
  else
    std::cout << failures << " acceptance criteria failed." << std::endl;
  return failures;
}
