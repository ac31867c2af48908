#include "ncpart/signed_partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ncpart/set_partition.hpp"

namespace ncpart {

namespace {

std::vector<int> negated(const std::vector<int>& blk) {
  std::vector<int> r;
  r.reserve(blk.size());
  for (int v : blk) r.push_back(-v);
  std::sort(r.begin(), r.end());
  return r;
}

int min_abs(const std::vector<int>& blk) {
  int m = std::abs(blk.front());
  for (int v : blk) m = std::min(m, std::abs(v));
  return m;
}

// Position of element v in the cyclic word 1, ..., n, -1, ..., -n (1-based).
int b_position(int v, int n) { return v > 0 ? v : n - v; }

}  // namespace

SignedPartition SignedPartition::make(int n, std::vector<std::vector<int>> allBlocks) {
  if (n < 0) throw std::invalid_argument("SignedPartition: negative n");
  std::vector<char> seen(2 * static_cast<std::size_t>(n) + 1, 0);
  auto seen_idx = [n](int v) { return static_cast<std::size_t>(v + n); };
  for (auto& blk : allBlocks) {
    if (blk.empty()) throw std::invalid_argument("SignedPartition: empty block");
    std::sort(blk.begin(), blk.end());
    for (int v : blk) {
      if (v == 0 || v < -n || v > n)
        throw std::invalid_argument("SignedPartition: element out of range");
      if (seen[seen_idx(v)]) throw std::invalid_argument("SignedPartition: duplicate element");
      seen[seen_idx(v)] = 1;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[seen_idx(v)] || !seen[seen_idx(-v)])
      throw std::invalid_argument("SignedPartition: missing element");

  SignedPartition p;
  p.n = n;
  std::map<std::vector<int>, int> index;  // sorted block -> position in allBlocks
  for (std::size_t i = 0; i < allBlocks.size(); ++i) index[allBlocks[i]] = static_cast<int>(i);
  for (const auto& blk : allBlocks) {
    std::vector<int> neg = negated(blk);
    if (neg == blk) {
      if (!p.zeroBlock.empty())
        throw std::invalid_argument("SignedPartition: more than one zero block");
      p.zeroBlock = blk;
    } else {
      if (index.find(neg) == index.end())
        throw std::invalid_argument("SignedPartition: not closed under negation");
      // Keep the representative containing +min_abs.
      int a = min_abs(blk);
      if (std::binary_search(blk.begin(), blk.end(), a)) p.pairedBlocks.push_back(blk);
    }
  }
  std::sort(p.pairedBlocks.begin(), p.pairedBlocks.end(),
            [](const auto& x, const auto& y) { return min_abs(x) < min_abs(y); });
  return p;
}

std::vector<std::vector<int>> SignedPartition::all_blocks() const {
  std::vector<std::vector<int>> out;
  for (const auto& blk : pairedBlocks) {
    out.push_back(blk);
    out.push_back(negated(blk));
  }
  if (!zeroBlock.empty()) out.push_back(zeroBlock);
  return out;
}

std::vector<int> SignedPartition::block_containing(int v) const {
  for (const auto& blk : all_blocks())
    if (std::binary_search(blk.begin(), blk.end(), v)) return blk;
  throw std::out_of_range("SignedPartition: element not found");
}

bool SignedPartition::same_block(int u, int v) const {
  auto blk = block_containing(u);
  return std::binary_search(blk.begin(), blk.end(), v);
}

namespace {

// The full blocks of p as a SetPartition on positions of the cyclic word
// 1, ..., n, -1, ..., -n.
SetPartition b_position_partition(const SignedPartition& p) {
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : p.all_blocks()) {
    std::vector<int> pos;
    pos.reserve(blk.size());
    for (int v : blk) pos.push_back(b_position(v, p.n));
    blocks.push_back(std::move(pos));
  }
  return SetPartition::make(2 * p.n, std::move(blocks));
}

}  // namespace

bool is_noncrossing_B(const SignedPartition& p) {
  // Noncrossing on a cycle is equivalent to noncrossing on the line obtained
  // by cutting the cycle at any point.
  return is_noncrossing_A(b_position_partition(p));
}

bool is_noncrossing_D(const SignedPartition& p) {
  int n = p.n;
  if (n < 2) throw std::invalid_argument("is_noncrossing_D: n must be >= 2");
  int m = n - 1;       // +-1..+-m on the circle
  int M = 2 * m;       // number of circle positions
  // Position of v (|v| <= m) in the cyclic word 1..m, -1..-m.
  auto pos = [m](int v) { return v > 0 ? v : m - v; };

  if (p.has_zero()) {
    const auto& z = p.zeroBlock;
    bool has_n = std::binary_search(z.begin(), z.end(), n);
    if (!has_n || z.size() < 4) return false;
  } else {
    // n and -n live in a mirror pair; no structural requirement yet.
  }

  // Restriction to +-[n-1] must be noncrossing on the M-cycle.
  std::vector<std::vector<int>> restricted;
  std::vector<int> c_prime;  // circle part of the block containing n (if no zero)
  for (const auto& blk : p.all_blocks()) {
    std::vector<int> part;
    for (int v : blk)
      if (std::abs(v) <= m) part.push_back(pos(v));
    bool contains_n = std::binary_search(blk.begin(), blk.end(), n);
    if (contains_n && !p.has_zero()) c_prime = part;
    if (!part.empty()) restricted.push_back(std::move(part));
  }
  if (!is_noncrossing_A(SetPartition::make(M, std::move(restricted)))) return false;

  if (p.has_zero() || c_prime.empty()) return true;

  // No zero block and the block C of n touches the circle.  Its convex hull
  // is hull(C') plus the fan from the center to the extremes of C'; the
  // mirror -C' must be strictly separated (C' within an open half-circle),
  // and no other block may span two distinct gaps of C' union -C'.
  std::sort(c_prime.begin(), c_prime.end());
  int sz = static_cast<int>(c_prime.size());
  int max_gap = 0;
  for (int i = 0; i < sz; ++i) {
    int next = c_prime[(i + 1) % sz] + (i + 1 == sz ? M : 0);
    max_gap = std::max(max_gap, next - c_prime[i]);
  }
  // C' fits in an open half-circle iff the largest gap is at least n.
  if (max_gap < n) return false;

  // Zone labels: positions not occupied by C' or -C' get the id of their
  // contiguous complement arc.
  std::vector<char> occupied(static_cast<std::size_t>(M) + 1, 0);
  for (int q : c_prime) {
    occupied[q] = 1;
    occupied[(q - 1 + m) % M + 1] = 1;  // antipodal position = mirror element
  }
  std::vector<int> zone(static_cast<std::size_t>(M) + 1, -1);
  // Find a starting occupied position, then sweep once around.
  int start = 0;
  for (int q = 1; q <= M; ++q)
    if (occupied[q]) start = q;
  int id = 0;
  for (int step = 1; step <= M; ++step) {
    int q = (start - 1 + step) % M + 1;
    if (occupied[q]) {
      ++id;
    } else {
      zone[q] = id;
    }
  }
  for (const auto& blk : p.pairedBlocks) {
    bool is_c = std::binary_search(blk.begin(), blk.end(), n) ||
                std::binary_search(blk.begin(), blk.end(), -n);
    if (is_c) continue;
    int z0 = zone[pos(blk.front())];
    for (int v : blk)
      if (zone[pos(v)] != z0) return false;
  }
  return true;
}

bool refines(const SignedPartition& a, const SignedPartition& b) {
  if (a.n != b.n) throw std::invalid_argument("refines: mismatched ground sets");
  int n = a.n;
  std::vector<int> owner(2 * static_cast<std::size_t>(n) + 1, -1);
  auto idx = [n](int v) { return static_cast<std::size_t>(v + n); };
  auto bblocks = b.all_blocks();
  for (std::size_t i = 0; i < bblocks.size(); ++i)
    for (int v : bblocks[i]) owner[idx(v)] = static_cast<int>(i);
  for (const auto& blk : a.all_blocks()) {
    int o = owner[idx(blk.front())];
    for (int v : blk)
      if (owner[idx(v)] != o) return false;
  }
  return true;
}

TypeVector type_of(const SignedPartition& p) {
  TypeVector t;
  t.counts.assign(static_cast<std::size_t>(p.n), 0);
  t.b = p.nz();
  for (const auto& blk : p.pairedBlocks) ++t.counts[blk.size() - 1];
  return t;
}

std::optional<TypeVector> k_type(const SignedPartition& p, int k) {
  if (k < 1) throw std::invalid_argument("k_type: k must be >= 1");
  for (const auto& blk : p.all_blocks())
    if (blk.size() % static_cast<std::size_t>(k) != 0) return std::nullopt;
  if (p.n % k != 0) return std::nullopt;
  TypeVector t;
  t.b = p.nz();
  t.counts.assign(static_cast<std::size_t>(p.n / k), 0);
  for (const auto& blk : p.pairedBlocks) ++t.counts[blk.size() / k - 1];
  return t;
}

int rank_of(const SignedPartition& p) { return p.n - p.nz(); }

namespace {

void enumerate_signed_rec(int i, int n, std::vector<std::vector<int>>& pairs,
                          std::vector<int>& zero, std::vector<SignedPartition>& out) {
  if (i > n) {
    std::vector<std::vector<int>> blocks;
    for (const auto& blk : pairs) {
      blocks.push_back(blk);
      blocks.push_back(negated(blk));
    }
    if (!zero.empty()) {
      std::vector<int> z = zero;
      for (int v : zero) z.push_back(-v);
      blocks.push_back(std::move(z));
    }
    out.push_back(SignedPartition::make(n, std::move(blocks)));
    return;
  }
  // New pair {i} / {-i}.
  pairs.push_back({i});
  enumerate_signed_rec(i + 1, n, pairs, zero, out);
  pairs.pop_back();
  // Join the zero block (creating it if needed); `zero` stores positives only.
  zero.push_back(i);
  enumerate_signed_rec(i + 1, n, pairs, zero, out);
  zero.pop_back();
  // Join an existing pair, as +i or as -i.
  for (auto& blk : pairs) {
    blk.push_back(i);
    enumerate_signed_rec(i + 1, n, pairs, zero, out);
    blk.back() = -i;
    enumerate_signed_rec(i + 1, n, pairs, zero, out);
    blk.pop_back();
  }
}

}  // namespace

std::vector<SignedPartition> enumerate_signed_partitions(int n) {
  std::vector<SignedPartition> out;
  std::vector<std::vector<int>> pairs;
  std::vector<int> zero;
  enumerate_signed_rec(1, n, pairs, zero, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPartition> enumerate_NCB(int n) {
  std::vector<SignedPartition> out;
  for (auto& p : enumerate_signed_partitions(n))
    if (is_noncrossing_B(p)) out.push_back(std::move(p));
  return out;
}

std::vector<SignedPartition> enumerate_NCD(int n) {
  std::vector<SignedPartition> out;
  for (auto& p : enumerate_signed_partitions(n))
    if (is_noncrossing_D(p)) out.push_back(std::move(p));
  return out;
}

}  // namespace ncpart
