#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ncpart/bigint.hpp"
#include "ncpart/bpair.hpp"

using namespace ncpart;

TEST_CASE("psi golden") {
  SignedPartition pi = SignedPartition::make(
      8, {{1, 2, -8}, {-1, -2, 8}, {3, -7}, {-3, 7}, {4, 5}, {-4, -5}, {6}, {-6}});
  BPair bp = psi(pi);
  CHECK(bp.sigma == SetPartition::make(8, {{1, 2, 8}, {3, 7}, {4, 5}, {6}}));
  CHECK(bp.x == XPart::make_edge(3, 7));
  CHECK(psi_inv(bp) == pi);
}

TEST_CASE("psi of a partition with a zero block") {
  SignedPartition pi = SignedPartition::make(3, {{2, 3, -2, -3}, {1}, {-1}});
  BPair bp = psi(pi);
  CHECK(bp.sigma == SetPartition::make(3, {{1}, {2, 3}}));
  CHECK(bp.x == XPart::make_block(2));
  CHECK(psi_inv(bp) == pi);
}

TEST_CASE("psi of an all-positive partition has empty x") {
  SignedPartition pi =
      SignedPartition::make(3, {{1, 2}, {-1, -2}, {3}, {-3}});
  BPair bp = psi(pi);
  CHECK(bp.sigma == SetPartition::make(3, {{1, 2}, {3}}));
  CHECK(bp.x == XPart::empty());
  CHECK(psi_inv(bp) == pi);
}

TEST_CASE("classify_x matches psi") {
  CHECK(classify_x(SignedPartition::make(3, {{2, 3, -2, -3}, {1}, {-1}})) ==
        XPart::make_block(2));
  for (int n = 1; n <= 4; ++n)
    for (const SignedPartition& pi : enumerate_NCB(n))
      CHECK(classify_x(pi) == psi(pi).x);
}

TEST_CASE("psi round-trips over NC_B") {
  for (int n = 1; n <= 4; ++n) {
    std::set<BPair> images;
    for (const SignedPartition& pi : enumerate_NCB(n)) {
      BPair bp = psi(pi);
      CHECK(is_noncrossing_A(bp.sigma));
      CHECK(psi_inv(bp) == pi);
      images.insert(bp);
    }
    CHECK(images.size() == enumerate_NCB(n).size());  // injective
  }
}

TEST_CASE("enumerate_bpairs is the psi image") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<BPair> pairs = enumerate_bpairs(n);
    CHECK(BigInt(pairs.size()) == binomial(2 * n, n));
    std::set<SignedPartition> back;
    for (const BPair& bp : pairs) {
      SignedPartition pi = psi_inv(bp);
      CHECK(is_noncrossing_B(pi));
      CHECK(psi(pi) == bp);
      back.insert(pi);
    }
    CHECK(back.size() == pairs.size());  // surjective onto NC_B
  }
}

TEST_CASE("psi_inv validates the x-part") {
  SetPartition sigma = SetPartition::make(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(psi_inv(BPair{sigma, XPart::make_edge(2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(psi_inv(BPair{sigma, XPart::make_block(2)}), std::invalid_argument);
  CHECK_NOTHROW(psi_inv(BPair{sigma, XPart::make_edge(1, 2)}));
  CHECK_NOTHROW(psi_inv(BPair{sigma, XPart::make_block(3)}));
}

TEST_CASE("leq_pairs transfers the refinement order") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<SignedPartition> ncb = enumerate_NCB(n);
    for (const SignedPartition& a : ncb)
      for (const SignedPartition& b : ncb)
        CHECK(leq_pairs(psi(a), psi(b)) == refines(a, b));
  }
}
