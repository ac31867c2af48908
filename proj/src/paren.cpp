#include "ncpart/paren.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ncpart {

ParenState ParenState::make(int n, std::vector<int> L, std::vector<std::vector<int>> Rs) {
  if (n < 1) throw std::invalid_argument("ParenState: n must be >= 1");
  auto check_set = [n](std::vector<int>& s) {
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 1 || s[i] > n) throw std::invalid_argument("ParenState: position out of range");
      if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("ParenState: duplicate position");
    }
  };
  check_set(L);
  for (auto& r : Rs) check_set(r);
  if (Rs.empty()) throw std::invalid_argument("ParenState: need at least one label");
  ParenState p;
  p.n = n;
  p.L = std::move(L);
  p.Rs = std::move(Rs);
  return p;
}

long long ParenState::total_rights() const {
  long long t = 0;
  for (const auto& r : Rs) t += static_cast<long long>(r.size());
  return t;
}

bool ParenState::in_P() const { return static_cast<long long>(L.size()) == total_rights(); }

Matching match_parens(const ParenState& p) {
  // Tokens of one copy, in reading order: '(' before the integer, then the
  // integer, then rights in increasing label order.
  struct Token {
    bool left;
    int pos;
    int label;  // rights only
  };
  std::vector<Token> copy;
  for (int pos = 1; pos <= p.n; ++pos) {
    if (std::binary_search(p.L.begin(), p.L.end(), pos)) copy.push_back({true, pos, 0});
    for (int j = 0; j < p.ell(); ++j)
      if (std::binary_search(p.Rs[j].begin(), p.Rs[j].end(), pos))
        copy.push_back({false, pos, j + 1});
  }

  Matching m;
  // Cyclic innermost-first matching: repeatedly match every left paren whose
  // next unconsumed paren token (cyclically) is a right paren.  For fully
  // matched words this agrees with stack matching; with surplus right parens
  // it is the rule that matches mirror-symmetric words symmetrically instead
  // of letting an early leftover right capture a late left across the seam.
  int T = static_cast<int>(copy.size());
  std::vector<char> used(static_cast<std::size_t>(T), 0);
  std::vector<int> matchedWith(static_cast<std::size_t>(T), -1);
  bool changed = T > 0;
  while (changed) {
    changed = false;
    for (int i = 0; i < T; ++i) {
      if (used[i] || !copy[i].left) continue;
      int j = -1;
      for (int step = 1; step < T; ++step) {
        int cand = (i + step) % T;
        if (!used[cand]) {
          j = cand;
          break;
        }
      }
      if (j >= 0 && !copy[j].left) {
        used[i] = used[j] = 1;
        matchedWith[i] = j;
        changed = true;
      }
    }
  }
  for (int i = 0; i < T; ++i) {
    if (matchedWith[i] >= 0)
      m.pairs.push_back(MatchedPair{copy[i].pos, copy[matchedWith[i]].pos,
                                    copy[matchedWith[i]].label, {}});
    else if (!used[i] && copy[i].left)
      m.unmatched_lefts.push_back(copy[i].pos);
    else if (!used[i])
      m.unmatched_rights.push_back({copy[i].pos, copy[i].label});
  }

  // Windows (cyclic [lpos, rpos]) form a laminar family; the block of a pair
  // is its window minus all strictly nested windows.
  int n = p.n;
  auto window = [n](const MatchedPair& mp) {
    std::vector<char> w(static_cast<std::size_t>(n) + 1, 0);
    int v = mp.lpos;
    while (true) {
      w[v] = 1;
      if (v == mp.rpos) break;
      v = v % n + 1;
    }
    return w;
  };
  std::vector<std::vector<char>> wins;
  wins.reserve(m.pairs.size());
  for (const auto& mp : m.pairs) wins.push_back(window(mp));
  auto wsize = [n](const std::vector<char>& w) {
    int s = 0;
    for (int v = 1; v <= n; ++v) s += w[v];
    return s;
  };
  auto subset = [n](const std::vector<char>& a, const std::vector<char>& b) {
    for (int v = 1; v <= n; ++v)
      if (a[v] && !b[v]) return false;
    return true;
  };
  for (std::size_t i = 0; i < m.pairs.size(); ++i) {
    std::vector<char> blk = wins[i];
    for (std::size_t j = 0; j < m.pairs.size(); ++j) {
      if (i == j) continue;
      if (wsize(wins[j]) < wsize(wins[i]) && subset(wins[j], wins[i]))
        for (int v = 1; v <= n; ++v)
          if (wins[j][v]) blk[v] = 0;
    }
    for (int v = 1; v <= n; ++v)
      if (blk[v]) m.pairs[i].block.push_back(v);
    if (m.pairs[i].block.empty())
      throw std::logic_error("match_parens: empty block in matching");
  }
  std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& w : wins)
    for (int v = 1; v <= n; ++v)
      if (w[v]) covered[v] = 1;
  for (int v = 1; v <= n; ++v)
    if (!covered[v]) m.free_integers.push_back(v);
  return m;
}

TypeVector paren_type(const ParenState& p) {
  Matching m = match_parens(p);
  if (!m.unmatched_lefts.empty() || !m.unmatched_rights.empty())
    throw std::invalid_argument("paren_type: unmatched parentheses");
  TypeVector t;
  t.counts.assign(static_cast<std::size_t>(p.n), 0);
  t.b = static_cast<long long>(m.pairs.size());
  for (const auto& mp : m.pairs) ++t.counts[mp.block.size() - 1];
  return t;
}

bool in_Pbar(const ParenState& p) {
  if (!p.in_P()) return false;
  Matching m = match_parens(p);
  if (!m.unmatched_lefts.empty() || !m.unmatched_rights.empty()) return false;
  return !m.free_integers.empty();
}

namespace {

std::pair<std::vector<int>, SetPartition> tau_of_matching(const ParenState& p,
                                                          const Matching& m) {
  if (!m.unmatched_lefts.empty() || !m.unmatched_rights.empty())
    throw std::invalid_argument("tau: unmatched parentheses");
  if (m.free_integers.empty())
    throw std::invalid_argument("tau: no free integers (not in P-bar)");
  std::vector<std::vector<int>> blocks;
  for (const auto& mp : m.pairs) blocks.push_back(mp.block);
  blocks.push_back(m.free_integers);
  return {m.free_integers, SetPartition::make(p.n, std::move(blocks))};
}

}  // namespace

std::pair<std::vector<int>, SetPartition> tau(const ParenState& p) {
  return tau_of_matching(p, match_parens(p));
}

namespace {

// Peeling pairs (left position, right position) of tau^{-1}, in removal order.
std::vector<std::pair<int, int>> tau_inv_pairs(const std::vector<int>& B,
                                               const SetPartition& pi) {
  if (!is_noncrossing_A(pi)) throw std::invalid_argument("tau_inv: pi is not noncrossing");
  int n = pi.n;
  std::vector<int> sortedB = B;
  std::sort(sortedB.begin(), sortedB.end());
  int bIdx = -1;
  for (int i = 0; i < pi.num_blocks(); ++i)
    if (pi.blocks[i] == sortedB) bIdx = i;
  if (bIdx < 0) throw std::invalid_argument("tau_inv: B is not a block of pi");

  std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
  std::vector<char> removed(pi.blocks.size(), 0);
  auto succ = [&](int v) {
    int u = v;
    do {
      u = u % n + 1;
    } while (!alive[u]);
    return u;
  };
  auto pred = [&](int v) {
    int u = v;
    do {
      u = (u + n - 2) % n + 1;
    } while (!alive[u]);
    return u;
  };
  std::vector<std::pair<int, int>> out;
  int blocks_left = pi.num_blocks();
  while (blocks_left > 1) {
    bool progress = false;
    for (int i = 0; i < pi.num_blocks() && blocks_left > 1; ++i) {
      if (removed[i] || i == bIdx) continue;
      const auto& A = pi.blocks[i];
      std::vector<char> inA(static_cast<std::size_t>(n) + 1, 0);
      for (int v : A) inA[v] = 1;
      // A is cyclically consecutive among alive integers iff exactly one
      // element of A has an alive successor outside A; the run then starts at
      // the unique element whose alive predecessor is outside A.
      int first = 0, last = 0, boundary = 0;
      for (int v : A) {
        if (!inA[succ(v)]) {
          ++boundary;
          last = v;
        }
        if (!inA[pred(v)]) first = v;
      }
      if (boundary != 1) continue;
      out.emplace_back(first, last);
      for (int v : A) alive[v] = 0;
      removed[i] = 1;
      --blocks_left;
      progress = true;
    }
    if (!progress) throw std::logic_error("tau_inv: no consecutive block found");
  }
  return out;
}

}  // namespace

ParenState tau_inv(const std::vector<int>& B, const SetPartition& pi) {
  std::vector<int> L, R;
  for (auto [lp, rp] : tau_inv_pairs(B, pi)) {
    L.push_back(lp);
    R.push_back(rp);
  }
  return ParenState::make(pi.n, std::move(L), {std::move(R)});
}

std::pair<std::vector<int>, std::vector<SetPartition>> tau_prime(const ParenState& p) {
  if (!p.in_P()) throw std::invalid_argument("tau_prime: |L| != total rights");
  ParenState q = p;
  std::vector<SetPartition> chain;
  std::vector<int> B1;
  for (int level = 1; level <= p.ell(); ++level) {
    Matching m = match_parens(q);
    auto [B, pi] = tau_of_matching(q, m);
    if (level == 1) B1 = B;
    chain.push_back(pi);
    // Delete rights labeled `level` together with their matched lefts.
    std::vector<int> dropL, dropR;
    for (const auto& mp : m.pairs)
      if (mp.label == level) {
        dropL.push_back(mp.lpos);
        dropR.push_back(mp.rpos);
      }
    auto remove_from = [](std::vector<int>& s, const std::vector<int>& drop) {
      for (int v : drop) s.erase(std::find(s.begin(), s.end(), v));
    };
    remove_from(q.L, dropL);
    remove_from(q.Rs[level - 1], dropR);
    if (!q.Rs[level - 1].empty())
      throw std::logic_error("tau_prime: rights of current label left unmatched");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!refines(chain[i], chain[i + 1]))
      throw std::logic_error("tau_prime: levels do not form a multichain");
  return {B1, chain};
}

ParenState tau_prime_inv(const std::vector<int>& B, const std::vector<SetPartition>& chain) {
  if (chain.empty()) throw std::invalid_argument("tau_prime_inv: empty chain");
  int n = chain.front().n;
  int ell = static_cast<int>(chain.size());
  for (int i = 0; i + 1 < ell; ++i)
    if (!refines(chain[i], chain[i + 1]))
      throw std::invalid_argument("tau_prime_inv: not a multichain");
  // B_i = block of pi_i containing B.
  if (B.empty()) throw std::invalid_argument("tau_prime_inv: empty block");
  std::vector<std::vector<int>> Bi(ell);
  for (int i = 0; i < ell; ++i) Bi[i] = chain[i].block_containing(B.front());
  std::vector<int> sortedB = B;
  std::sort(sortedB.begin(), sortedB.end());
  if (Bi[0] != sortedB)
    throw std::invalid_argument("tau_prime_inv: B is not a block of the bottom");

  std::vector<int> L;
  std::vector<std::vector<int>> Rs(static_cast<std::size_t>(ell));
  for (int i = ell; i >= 1; --i) {
    for (auto [lp, rp] : tau_inv_pairs(Bi[i - 1], chain[i - 1])) {
      if (std::find(L.begin(), L.end(), lp) == L.end()) {
        L.push_back(lp);
        Rs[i - 1].push_back(rp);
      }
    }
  }
  return ParenState::make(n, std::move(L), std::move(Rs));
}

BigInt count_paren_by_type(int n, const TypeVector& type, const std::vector<long long>& c) {
  long long csum = 0;
  for (long long v : c) {
    if (v < 0) return 0;
    csum += v;
  }
  if (csum != type.b || !type.consistent()) return 0;
  BigInt result = multinomial(type.b, type.counts);
  for (long long v : c) result *= binomial(n, v);
  return result;
}

namespace {

void subsets_rec(int n, int from, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& fn) {
  fn(cur);
  for (int v = from; v <= n; ++v) {
    cur.push_back(v);
    subsets_rec(n, v + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ParenState> enumerate_P(int n, int ell) {
  // All subsets of [n], grouped by size.
  std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(n) + 1);
  {
    std::vector<int> cur;
    std::function<void(const std::vector<int>&)> fn = [&](const std::vector<int>& s) {
      by_size[s.size()].push_back(s);
    };
    subsets_rec(n, 1, cur, fn);
  }
  std::vector<ParenState> out;
  std::vector<std::vector<int>> rs(static_cast<std::size_t>(ell));
  auto rec = [&](auto&& self, int j, int used, const std::vector<int>& L) -> void {
    if (j == ell) {
      if (used == static_cast<int>(L.size())) out.push_back(ParenState::make(n, L, rs));
      return;
    }
    for (int sz = 0; used + sz <= static_cast<int>(L.size()) && sz <= n; ++sz)
      for (const auto& r : by_size[sz]) {
        rs[j] = r;
        self(self, j + 1, used + sz, L);
      }
  };
  for (int lsz = 0; lsz <= n; ++lsz)
    for (const auto& L : by_size[lsz]) rec(rec, 0, 0, L);
  return out;
}

}  // namespace ncpart
