#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "ncpart/bigint.hpp"
#include "ncpart/paren.hpp"
#include "ncpart/set_partition.hpp"

using namespace ncpart;

namespace {

std::set<std::pair<int, int>> pair_set(const Matching& m) {
  std::set<std::pair<int, int>> s;
  for (const MatchedPair& p : m.pairs) s.insert({p.lpos, p.rpos});
  return s;
}

}  // namespace

TEST_CASE("make validates") {
  CHECK_THROWS_AS(ParenState::make(0, {}, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(ParenState::make(3, {1, 1}, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(ParenState::make(3, {4}, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(ParenState::make(3, {1}, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(ParenState::make(3, {1}, {}), std::invalid_argument);
  ParenState p = ParenState::make(3, {3, 1}, {{2}, {3}});
  CHECK(p.L == std::vector<int>{1, 3});  // sorted
  CHECK(p.ell() == 2);
  CHECK(p.total_rights() == 2);
  CHECK(p.in_P());
}

TEST_CASE("single-level worked example") {
  // (2 (3 4) 5) 6 7 8) ... : lefts at 2,3,9,11,15,16; rights after
  // 1,4,5,8,9,12 on the cyclic word [16].
  ParenState p =
      ParenState::make(16, {2, 3, 9, 11, 15, 16}, {{1, 4, 5, 8, 9, 12}});
  CHECK(p.in_P());
  CHECK(in_Pbar(p));

  Matching m = match_parens(p);
  CHECK(m.unmatched_lefts.empty());
  CHECK(m.unmatched_rights.empty());
  CHECK(pair_set(m) == std::set<std::pair<int, int>>{
                           {2, 5}, {3, 4}, {9, 9}, {11, 12}, {15, 8}, {16, 1}});
  CHECK(m.free_integers == std::vector<int>{10, 13, 14});

  TypeVector tv = paren_type(p);
  CHECK(tv.b == 6);
  std::vector<long long> counts(16, 0);
  counts[0] = 1;  // {9}
  counts[1] = 4;  // {1,16}, {2,5}, {3,4}, {11,12}
  counts[3] = 1;  // {6,7,8,15}
  CHECK(tv.counts == counts);

  auto [B, pi] = tau(p);
  CHECK(B == std::vector<int>{10, 13, 14});
  CHECK(pi == SetPartition::make(16, {{1, 16},
                                      {2, 5},
                                      {3, 4},
                                      {6, 7, 8, 15},
                                      {9},
                                      {10, 13, 14},
                                      {11, 12}}));
  CHECK(tau_inv(B, pi) == p);
}

TEST_CASE("matching with surplus rights stays mirror-symmetric") {
  // Doubled annulus word: surplus rights at 12 and 28 must stay unmatched;
  // the left at 13 takes the right at 20 (not the earlier surplus at 12).
  ParenState p = ParenState::make(32, {7, 13, 23, 29}, {{4, 10, 12, 20, 26, 28}});
  Matching m = match_parens(p);
  CHECK(pair_set(m) ==
        std::set<std::pair<int, int>>{{7, 10}, {13, 20}, {23, 26}, {29, 4}});
  CHECK(m.unmatched_rights ==
        std::vector<std::pair<int, int>>{{12, 1}, {28, 1}});
  CHECK(m.unmatched_lefts.empty());
  CHECK(m.free_integers == std::vector<int>{5, 6, 11, 12, 21, 22, 27, 28});
}

TEST_CASE("two-level worked example") {
  // (2)_1)_2 3 (4 (5 6)_2 7 on the cyclic word [7].
  ParenState T = ParenState::make(7, {2, 4, 5}, {{2}, {2, 6}});
  CHECK(T.in_P());
  CHECK(in_Pbar(T));

  auto [B, chain] = tau_prime(T);
  CHECK(B == std::vector<int>{3});
  REQUIRE(chain.size() == 2);
  CHECK(chain[0] == SetPartition::make(7, {{1, 4, 7}, {2}, {3}, {5, 6}}));
  CHECK(chain[1] == SetPartition::make(7, {{1, 2, 4, 7}, {3}, {5, 6}}));
  CHECK(refines(chain[0], chain[1]));
  CHECK(tau_prime_inv(B, chain) == T);
}

TEST_CASE("enumerate_P sizes") {
  for (int n = 1; n <= 5; ++n)
    for (int ell = 1; ell <= 3; ++ell)
      CHECK(BigInt(enumerate_P(n, ell).size()) == binomial((ell + 1) * n, n));
}

TEST_CASE("tau round-trips on P-bar(n, 1)") {
  for (int n = 2; n <= 6; ++n) {
    int seen = 0;
    for (const ParenState& p : enumerate_P(n, 1)) {
      if (!in_Pbar(p)) continue;
      ++seen;
      auto [B, pi] = tau(p);
      CHECK(is_noncrossing_A(pi));
      CHECK(!B.empty());
      // B is a block of pi.
      CHECK(pi.block_containing(B[0]) == B);
      CHECK(tau_inv(B, pi) == p);
    }
    // Image side: every (block, noncrossing partition) pair arises.
    int pairs = 0;
    for (const SetPartition& pi : enumerate_NC(n)) {
      for (const auto& B : pi.blocks) {
        ParenState p = tau_inv(B, pi);
        auto [B2, pi2] = tau(p);
        CHECK(B2 == B);
        CHECK(pi2 == pi);
        ++pairs;
      }
    }
    CHECK(pairs == seen);
  }
}

TEST_CASE("tau_prime round-trips on P-bar(n, ell)") {
  for (auto [n, ell] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {4, 3}}) {
    int seen = 0;
    for (const ParenState& p : enumerate_P(n, ell)) {
      if (!in_Pbar(p)) continue;
      ++seen;
      auto [B, chain] = tau_prime(p);
      REQUIRE(static_cast<int>(chain.size()) == ell);
      for (int i = 0; i + 1 < ell; ++i) CHECK(refines(chain[i], chain[i + 1]));
      CHECK(chain[0].block_containing(B[0]) == B);
      CHECK(tau_prime_inv(B, chain) == p);
    }
    // Chain side: every multichain with a marked block of the bottom element.
    std::vector<SetPartition> nc = enumerate_NC(n);
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    std::function<void(int)> build = [&](int depth) {
      if (depth == ell) {
        chains.push_back(cur);
        return;
      }
      for (int j = 0; j < static_cast<int>(nc.size()); ++j) {
        if (!cur.empty() && !refines(nc[static_cast<std::size_t>(cur.back())],
                                     nc[static_cast<std::size_t>(j)]))
          continue;
        cur.push_back(j);
        build(depth + 1);
        cur.pop_back();
      }
    };
    build(0);
    int pairs = 0;
    for (const std::vector<int>& ch : chains) {
      std::vector<SetPartition> chain;
      for (int j : ch) chain.push_back(nc[static_cast<std::size_t>(j)]);
      for (const auto& B : chain[0].blocks) {
        ParenState p = tau_prime_inv(B, chain);
        auto [B2, chain2] = tau_prime(p);
        CHECK(B2 == B);
        CHECK(chain2 == chain);
        ++pairs;
      }
    }
    CHECK(pairs == seen);
  }
}

TEST_CASE("count_paren_by_type matches brute-force buckets") {
  int n = 4, ell = 2;
  std::map<std::pair<TypeVector, std::vector<long long>>, long long> buckets;
  for (const ParenState& p : enumerate_P(n, ell)) {
    std::vector<long long> c;
    for (const auto& r : p.Rs) c.push_back(static_cast<long long>(r.size()));
    buckets[{paren_type(p), c}] += 1;
  }
  BigInt total = 0;
  for (const auto& [key, cnt] : buckets) {
    CHECK(count_paren_by_type(n, key.first, key.second) == cnt);
    total += cnt;
  }
  CHECK(total == binomial((ell + 1) * n, n));
  // Zero when the label counts do not sum to the number of pairs; otherwise
  // the product formula (two singleton pairs here: 2!/2! * C(4,1)^2).
  TypeVector two_singletons{2, {2, 0, 0, 0}};
  CHECK(count_paren_by_type(n, two_singletons, {1, 0}) == 0);
  CHECK(count_paren_by_type(n, two_singletons, {1, 1}) == 16);
}

TEST_CASE("in_Pbar needs a free integer") {
  ParenState nofree = ParenState::make(2, {1, 2}, {{1, 2}});
  CHECK(nofree.in_P());
  CHECK_FALSE(in_Pbar(nofree));
  ParenState unbalanced = ParenState::make(3, {1}, {{1}, {2}});
  CHECK_FALSE(unbalanced.in_P());
  CHECK_FALSE(in_Pbar(unbalanced));
}
