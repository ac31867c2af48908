#include "ncpart/bpair.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace ncpart {

BPair psi(const SignedPartition& pi) {
  int n = pi.n;
  // Positive parts of all blocks; mark the ones whose block had a negative.
  std::vector<std::vector<int>> mixed;    // the X-parts
  std::vector<std::vector<int>> plain;    // blocks untouched by negatives
  for (const auto& blk : pi.all_blocks()) {
    std::vector<int> part;
    bool has_negative = false;
    for (int v : blk) {
      if (v > 0)
        part.push_back(v);
      else
        has_negative = true;
    }
    if (part.empty()) continue;
    if (has_negative)
      mixed.push_back(std::move(part));
    else
      plain.push_back(std::move(part));
  }
  std::sort(mixed.begin(), mixed.end(), [](const auto& a, const auto& b) {
    return a.back() < b.back();
  });
  int t = static_cast<int>(mixed.size());

  std::vector<std::vector<int>> blocks = plain;
  for (int i = 0; i < t / 2; ++i) {
    std::vector<int> merged = mixed[i];
    merged.insert(merged.end(), mixed[t - 1 - i].begin(), mixed[t - 1 - i].end());
    blocks.push_back(std::move(merged));
  }
  if (t % 2 == 1) blocks.push_back(mixed[(t - 1) / 2]);

  BPair bp;
  bp.sigma = SetPartition::make(n, std::move(blocks));
  if (t == 0) {
    bp.x = XPart::empty();
  } else if (t % 2 == 0) {
    bp.x = XPart::make_edge(mixed[t / 2 - 1].back(), mixed[t / 2].front());
  } else {
    bp.x = XPart::make_block(mixed[(t - 1) / 2].front());
  }
  return bp;
}

namespace {

bool is_edge_of(const SetPartition& sigma, Edge e) {
  for (Edge f : edges(sigma))
    if (f == e) return true;
  return false;
}

// Splits the blocks of sigma across the window [a, b]: each block meeting
// both [1, a] and [b, n] becomes +-(low union -high); others stay +-A.
// `exclude` (if non-negative) is the block index left out (the zero block).
std::vector<std::vector<int>> split_blocks(const SetPartition& sigma, int a, int b,
                                           int exclude) {
  std::vector<std::vector<int>> out;
  for (int bi = 0; bi < sigma.num_blocks(); ++bi) {
    if (bi == exclude) continue;
    const auto& A = sigma.blocks[bi];
    std::vector<int> low, high;
    for (int v : A) {
      if (v <= a) low.push_back(v);
      if (v >= b) high.push_back(v);
    }
    std::vector<int> blk, neg;
    if (low.empty() || high.empty()) {
      blk = A;
    } else {
      blk = low;
      for (int v : high) blk.push_back(-v);
    }
    for (int v : blk) neg.push_back(-v);
    out.push_back(std::move(blk));
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace

SignedPartition psi_inv(const BPair& bp) {
  const SetPartition& sigma = bp.sigma;
  int n = sigma.n;
  std::vector<std::vector<int>> blocks;
  switch (bp.x.kind) {
    case XPart::Kind::Empty:
      blocks = split_blocks(sigma, n + 1, n + 1, -1);  // no block straddles
      break;
    case XPart::Kind::EdgeX: {
      Edge e = bp.x.edge;
      if (!is_edge_of(sigma, e))
        throw std::invalid_argument("psi_inv: x is not an edge of sigma");
      blocks = split_blocks(sigma, e.i, e.j, -1);
      break;
    }
    case XPart::Kind::BlockX: {
      int bi = sigma.block_index(bp.x.blockMin);
      const auto& B = sigma.blocks[bi];
      if (B.front() != bp.x.blockMin)
        throw std::invalid_argument("psi_inv: x does not name a block of sigma");
      blocks = split_blocks(sigma, B.front(), B.back(), bi);
      std::vector<int> zero = B;
      for (int v : B) zero.push_back(-v);
      blocks.push_back(std::move(zero));
      break;
    }
  }
  return SignedPartition::make(n, std::move(blocks));
}

XPart classify_x(const SignedPartition& pi) {
  int n = pi.n;
  // BlockX: some i ~ -i.
  std::vector<int> self;
  for (int i = 1; i <= n; ++i)
    if (pi.same_block(i, -i)) self.push_back(i);
  if (!self.empty()) return XPart::make_block(self.front());
  // EdgeX: the unique minimal-length pair i < j with i ~ -j.
  std::optional<Edge> best;
  int hits = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pi.same_block(i, -j)) {
        if (!best || j - i < best->j - best->i) {
          best = Edge{i, j};
          hits = 1;
        } else if (j - i == best->j - best->i) {
          ++hits;
        }
      }
  if (!best) return XPart::empty();
  if (hits != 1) throw std::logic_error("classify_x: minimal pair not unique");
  return XPart::make_edge(best->i, best->j);
}

bool leq_pairs(const BPair& p1, const BPair& p2) {
  if (!refines(p1.sigma, p2.sigma)) return false;
  switch (p2.x.kind) {
    case XPart::Kind::Empty:
      return p1.x.kind == XPart::Kind::Empty;
    case XPart::Kind::EdgeX: {
      int a = p2.x.edge.i, b = p2.x.edge.j;
      std::optional<Edge> best;
      for (Edge e : edges(p1.sigma))
        if (e.i <= a && b <= e.j)
          if (!best || e.j - e.i < best->j - best->i) best = e;
      if (best) return p1.x.kind == XPart::Kind::EdgeX && p1.x.edge == *best;
      return p1.x.kind == XPart::Kind::Empty;
    }
    case XPart::Kind::BlockX: {
      const auto& B2 = p2.sigma.block_containing(p2.x.blockMin);
      auto in_B2 = [&](int v) { return std::binary_search(B2.begin(), B2.end(), v); };
      std::optional<Edge> straddler;  // minimal-length edge strictly around B2
      for (Edge e : edges(p1.sigma))
        if (e.i < B2.front() && B2.back() < e.j)
          if (!straddler || e.j - e.i < straddler->j - straddler->i) straddler = e;
      switch (p1.x.kind) {
        case XPart::Kind::BlockX: {
          const auto& B1 = p1.sigma.block_containing(p1.x.blockMin);
          return std::includes(B2.begin(), B2.end(), B1.begin(), B1.end());
        }
        case XPart::Kind::EdgeX: {
          Edge e = p1.x.edge;
          if (in_B2(e.i) && in_B2(e.j)) return true;
          return straddler && e == *straddler;
        }
        case XPart::Kind::Empty:
          return !straddler;
      }
      return false;
    }
  }
  return false;
}

std::vector<BPair> enumerate_bpairs(int n) {
  std::vector<BPair> out;
  for (const SetPartition& sigma : enumerate_NC(n)) {
    out.push_back(BPair{sigma, XPart::empty()});
    for (Edge e : edges(sigma)) out.push_back(BPair{sigma, XPart::make_edge(e.i, e.j)});
    for (const auto& blk : sigma.blocks)
      out.push_back(BPair{sigma, XPart::make_block(blk.front())});
  }
  return out;
}

}  // namespace ncpart
