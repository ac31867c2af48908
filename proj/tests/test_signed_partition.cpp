#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ncpart/bigint.hpp"
#include "ncpart/signed_partition.hpp"

using namespace ncpart;

TEST_CASE("make canonicalizes and validates") {
  SignedPartition p = SignedPartition::make(3, {{-3, 2}, {3, -2}, {1, -1}});
  CHECK(p.nz() == 1);
  CHECK(p.pairedBlocks == std::vector<std::vector<int>>{{-3, 2}});
  CHECK(p.zeroBlock == std::vector<int>{-1, 1});
  CHECK(p.has_zero());

  // Not closed under negation.
  CHECK_THROWS_AS(SignedPartition::make(2, {{1, 2}, {-1}, {-2}}), std::invalid_argument);
  // Two self-negating blocks.
  CHECK_THROWS_AS(SignedPartition::make(2, {{1, -1}, {2, -2}}), std::invalid_argument);
  // Missing elements.
  CHECK_THROWS_AS(SignedPartition::make(2, {{1, -1}}), std::invalid_argument);
}

TEST_CASE("block queries") {
  SignedPartition p = SignedPartition::make(3, {{1, -2}, {-1, 2}, {3, -3}});
  CHECK(p.block_containing(1) == std::vector<int>{-2, 1});
  CHECK(p.block_containing(2) == std::vector<int>{-1, 2});
  CHECK(p.block_containing(-3) == std::vector<int>{-3, 3});
  CHECK(p.same_block(1, -2));
  CHECK(p.same_block(3, -3));
  CHECK_FALSE(p.same_block(1, 2));
  CHECK(p.all_blocks().size() == 3);
}

TEST_CASE("enumerate_signed_partitions counts") {
  long long expected[] = {0, 2, 6, 24, 116, 648};
  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<long long>(enumerate_signed_partitions(n).size()) == expected[n]);
}

TEST_CASE("NC_B counts are central binomials") {
  for (int n = 1; n <= 5; ++n)
    CHECK(BigInt(enumerate_NCB(n).size()) == binomial(2 * n, n));
}

TEST_CASE("enumerate_NCB equals the filtered brute-force set") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<SignedPartition> list = enumerate_NCB(n);
    std::set<SignedPartition> ncb(list.begin(), list.end());
    CHECK(ncb.size() == list.size());
    std::set<SignedPartition> filtered;
    for (const SignedPartition& p : enumerate_signed_partitions(n))
      if (is_noncrossing_B(p)) filtered.insert(p);
    CHECK(ncb == filtered);
  }
}

TEST_CASE("NC_D counts") {
  // |NC_D(n)| = C(2n, n) - C(2n-2, n-1).
  long long expected[] = {0, 0, 4, 14, 50, 182};
  for (int n = 2; n <= 5; ++n) {
    CHECK(static_cast<long long>(enumerate_NCD(n).size()) == expected[n]);
    CHECK(BigInt(expected[n]) == binomial(2 * n, n) - binomial(2 * n - 2, n - 1));
  }
}

TEST_CASE("NC_D(2) is exactly the four known elements") {
  std::vector<SignedPartition> list = enumerate_NCD(2);
  std::set<SignedPartition> d2(list.begin(), list.end());
  std::set<SignedPartition> expected{
      SignedPartition::make(2, {{1}, {-1}, {2}, {-2}}),
      SignedPartition::make(2, {{1, 2}, {-1, -2}}),
      SignedPartition::make(2, {{1, -2}, {-1, 2}}),
      SignedPartition::make(2, {{1, 2, -1, -2}}),
  };
  CHECK(d2 == expected);
}

TEST_CASE("type D zero block must strictly contain n and -n") {
  // Zero block exactly {n, -n}: excluded.
  CHECK_FALSE(is_noncrossing_D(SignedPartition::make(2, {{1}, {-1}, {2, -2}})));
  // Zero block strictly larger: allowed (if noncrossing).
  CHECK(is_noncrossing_D(SignedPartition::make(2, {{1, 2, -1, -2}})));
  // Zero block missing n: excluded.
  CHECK_FALSE(is_noncrossing_D(SignedPartition::make(2, {{1, -1}, {2}, {-2}})));
}

TEST_CASE("refines on signed partitions") {
  SignedPartition fine = SignedPartition::make(2, {{1}, {-1}, {2}, {-2}});
  SignedPartition mid = SignedPartition::make(2, {{1, 2}, {-1, -2}});
  SignedPartition top = SignedPartition::make(2, {{1, 2, -1, -2}});
  CHECK(refines(fine, mid));
  CHECK(refines(mid, top));
  CHECK(refines(fine, top));
  CHECK_FALSE(refines(top, mid));
  CHECK_FALSE(refines(SignedPartition::make(2, {{1, -2}, {-1, 2}}), mid));
  for (const SignedPartition& p : enumerate_NCB(3)) CHECK(refines(p, p));
}

TEST_CASE("type, k_type, rank") {
  SignedPartition p = SignedPartition::make(4, {{1, 2}, {-1, -2}, {3}, {-3}, {4, -4}});
  TypeVector tv = type_of(p);
  CHECK(tv.b == 2);  // zero block not counted
  CHECK(tv.counts == std::vector<long long>{1, 1, 0, 0});
  CHECK(rank_of(p) == 2);  // n - nz = 4 - 2

  auto kt = k_type(p, 2);
  CHECK_FALSE(kt.has_value());  // singleton pair {3}/{-3} not 2-divisible
  SignedPartition q = SignedPartition::make(4, {{1, 2}, {-1, -2}, {3, 4}, {-3, -4}});
  auto kt2 = k_type(q, 2);
  REQUIRE(kt2.has_value());
  CHECK(kt2->b == 2);
  CHECK(kt2->counts == std::vector<long long>{2, 0});

  for (const SignedPartition& b : enumerate_NCB(4)) {
    TypeVector t = type_of(b);
    long long zeroSize = static_cast<long long>(b.zeroBlock.size());
    CHECK(2 * t.weighted_sum() + zeroSize == 8);
    CHECK(rank_of(b) == 4 - b.nz());
  }
}
