#include "ncpart/set_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncpart {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::A: return "A";
    case FamilyKind::B: return "B";
    case FamilyKind::D: return "D";
    case FamilyKind::AugA: return "AugA";
    case FamilyKind::TildeA: return "TildeA";
  }
  return "?";
}

SetPartition SetPartition::make(int n, std::vector<std::vector<int>> blocks) {
  if (n < 0) throw std::invalid_argument("SetPartition: negative n");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (auto& blk : blocks) {
    if (blk.empty()) throw std::invalid_argument("SetPartition: empty block");
    std::sort(blk.begin(), blk.end());
    for (int v : blk) {
      if (v < 1 || v > n) throw std::invalid_argument("SetPartition: element out of range");
      if (seen[v]) throw std::invalid_argument("SetPartition: duplicate element");
      seen[v] = 1;
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("SetPartition: missing element");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  SetPartition p;
  p.n = n;
  p.blocks = std::move(blocks);
  return p;
}

int SetPartition::block_index(int i) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), i))
      return static_cast<int>(b);
  throw std::out_of_range("SetPartition: element not found");
}

namespace {

std::vector<int> owner_array(const SetPartition& p) {
  std::vector<int> owner(static_cast<std::size_t>(p.n) + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (int v : p.blocks[b]) owner[v] = static_cast<int>(b);
  return owner;
}

}  // namespace

bool is_noncrossing_A(const SetPartition& p) {
  // Left-to-right scan with a stack of open blocks.  An element visiting a
  // block that is not on top of the stack witnesses a crossing.
  std::vector<int> owner = owner_array(p);
  std::vector<int> stack;
  for (int i = 1; i <= p.n; ++i) {
    int b = owner[i];
    if (i == p.blocks[b].front()) {
      stack.push_back(b);
    } else if (stack.empty() || stack.back() != b) {
      return false;
    }
    if (i == p.blocks[b].back()) stack.pop_back();
  }
  return true;
}

bool refines(const SetPartition& a, const SetPartition& b) {
  if (a.n != b.n) throw std::invalid_argument("refines: mismatched ground sets");
  std::vector<int> owner = owner_array(b);
  for (const auto& blk : a.blocks) {
    int o = owner[blk.front()];
    for (int v : blk)
      if (owner[v] != o) return false;
  }
  return true;
}

TypeVector type_of(const SetPartition& p) {
  TypeVector t;
  t.counts.assign(static_cast<std::size_t>(p.n), 0);
  t.b = p.num_blocks();
  for (const auto& blk : p.blocks) ++t.counts[blk.size() - 1];
  return t;
}

std::optional<TypeVector> k_type(const SetPartition& p, int k) {
  if (k < 1) throw std::invalid_argument("k_type: k must be >= 1");
  for (const auto& blk : p.blocks)
    if (blk.size() % static_cast<std::size_t>(k) != 0) return std::nullopt;
  TypeVector t;
  t.b = p.num_blocks();
  t.counts.assign(static_cast<std::size_t>(p.n / k), 0);
  for (const auto& blk : p.blocks) ++t.counts[blk.size() / k - 1];
  return t;
}

int rank_of(const SetPartition& p) { return p.n - p.num_blocks(); }

SetPartition rotate_half(const SetPartition& p) {
  if (p.n % 2 != 0) throw std::invalid_argument("rotate_half: n must be even");
  int half = p.n / 2;
  std::vector<std::vector<int>> blocks;
  blocks.reserve(p.blocks.size());
  for (const auto& blk : p.blocks) {
    std::vector<int> img;
    img.reserve(blk.size());
    for (int v : blk) img.push_back((v - 1 + half) % p.n + 1);
    blocks.push_back(std::move(img));
  }
  return SetPartition::make(p.n, std::move(blocks));
}

std::vector<Edge> edges(const SetPartition& p) {
  std::vector<Edge> result;
  for (const auto& blk : p.blocks)
    for (std::size_t t = 0; t + 1 < blk.size(); ++t)
      result.push_back(Edge{blk[t], blk[t + 1]});
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

void enumerate_nc_rec(int i, int n, std::vector<std::vector<int>>& open,
                      std::vector<std::vector<int>>& closed,
                      std::vector<SetPartition>& out) {
  if (i > n) {
    std::vector<std::vector<int>> blocks = closed;
    blocks.insert(blocks.end(), open.begin(), open.end());
    out.push_back(SetPartition::make(n, std::move(blocks)));
    return;
  }
  // Start a new block with i.
  open.push_back({i});
  enumerate_nc_rec(i + 1, n, open, closed, out);
  open.pop_back();
  // Join the open block at depth d; this closes everything above d
  // (any later element joining a closed block would cross).
  for (int d = static_cast<int>(open.size()) - 1; d >= 0; --d) {
    std::vector<std::vector<int>> suffix(open.begin() + d + 1, open.end());
    std::size_t closed_before = closed.size();
    closed.insert(closed.end(), suffix.begin(), suffix.end());
    open.resize(d + 1);
    open[d].push_back(i);
    enumerate_nc_rec(i + 1, n, open, closed, out);
    open[d].pop_back();
    open.insert(open.end(), suffix.begin(), suffix.end());
    closed.resize(closed_before);
  }
}

}  // namespace

std::vector<SetPartition> enumerate_NC(int n) {
  std::vector<SetPartition> out;
  std::vector<std::vector<int>> open, closed;
  enumerate_nc_rec(1, n, open, closed, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> enumerate_all_partitions(int n) {
  // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]).
  std::vector<SetPartition> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto emit = [&]() {
    int m = 0;
    for (int v : a) m = std::max(m, v + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) blocks[a[i]].push_back(i + 1);
    out.push_back(SetPartition::make(n, std::move(blocks)));
  };
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  if (n == 0) {
    out.push_back(SetPartition::make(0, {}));
    return out;
  }
  rec(rec, 0, -1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpart
