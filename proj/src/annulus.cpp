#include "ncpart/annulus.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>

namespace ncpart {

namespace {

// Doubled outer word 1, ..., m, -1, ..., -m: word index w in [1, 2m].
int elem_of(int w, int m) { return w <= m ? w : -(w - m); }
int widx_of(int v, int m) { return v > 0 ? v : m - v; }

// Inner circle in counterclockwise order: is, is+1, ..., kn, -is, ..., -kn.
int next_inner(int v, int is, int kn) {
  if (v > 0) return v < kn ? v + 1 : -is;
  return -v < kn ? -(-v + 1) : is;
}

// The datum's parens placed symmetrically on the doubled outer word.
ParenState doubled(const ParenState& p) {
  int m = p.n;
  std::vector<int> L2;
  for (int v : p.L) {
    L2.push_back(v);
    L2.push_back(m + v);
  }
  std::vector<std::vector<int>> Rs2(p.Rs.size());
  for (std::size_t j = 0; j < p.Rs.size(); ++j)
    for (int v : p.Rs[j]) {
      Rs2[j].push_back(v);
      Rs2[j].push_back(m + v);
    }
  return ParenState::make(2 * m, std::move(L2), std::move(Rs2));
}

struct Pooled {
  int m = 0;
  std::vector<MatchedPair> pairs;        // word positions (from the doubled word)
  std::vector<std::vector<int>> blocks;  // signed elements per matched pair
  std::vector<int> freeElems;            // signed elements, word order
  std::vector<int> reps;                 // unmatched-right positions (positive), ascending
};

// Shared validation for tau_D and in_PkD.  With strict = true this is exactly
// membership in P^{(k)}_D; with strict = false the fully-matched,
// no-free-integer data (partitions with a pure-inner block pair) also pass.
Pooled pool_and_check(const DParenState& p, bool strict) {
  if (p.n < 2 || p.k < 1) throw std::invalid_argument("DParenState: need n >= 2, k >= 1");
  int m = p.k * (p.n - 1);
  if (p.paren.n != m) throw std::invalid_argument("DParenState: paren word must have length k(n-1)");
  for (const auto& [pos, cnt] : p.f)
    if (pos < 1 || pos > m || cnt < 1)
      throw std::invalid_argument("DParenState: bad f entry");

  Pooled out;
  out.m = m;
  Matching match = match_parens(doubled(p.paren));
  if (!match.unmatched_lefts.empty())
    throw std::invalid_argument("DParenState: unmatched left parenthesis");

  // Unmatched rights must mirror in position and label.  Two unmatched rights
  // can never share a position: the later one would enclose no integers, so
  // its size f would have to be k, forcing the f-sum past k.
  std::map<int, std::vector<std::pair<int, int>>> byRep;  // rep -> (w, label)
  for (auto [w, lab] : match.unmatched_rights) byRep[w <= m ? w : w - m].push_back({w, lab});
  for (auto& [rep, toks] : byRep) {
    if (toks.size() != 2 || toks[0].second != toks[1].second ||
        toks[0].first != rep || toks[1].first != rep + m)
      throw std::invalid_argument("DParenState: unmatched rights not symmetric");
    out.reps.push_back(rep);
  }
  {
    std::vector<int> fkeys;
    for (const auto& [pos, cnt] : p.f) fkeys.push_back(pos);
    if (fkeys != out.reps)
      throw std::invalid_argument("DParenState: f must be defined exactly on the unmatched rights");
  }

  out.pairs = match.pairs;
  for (const auto& mp : match.pairs) {
    std::vector<int> blk;
    for (int w : mp.block) blk.push_back(elem_of(w, m));
    std::sort(blk.begin(), blk.end());
    if (static_cast<int>(blk.size()) % p.k != 0)
      throw std::invalid_argument("DParenState: matched block size not divisible by k");
    out.blocks.push_back(std::move(blk));
  }
  for (int w : match.free_integers) out.freeElems.push_back(elem_of(w, m));

  if (!out.reps.empty()) {
    long long fsum = 0;
    for (const auto& [pos, cnt] : p.f) fsum += cnt;
    if (fsum != p.k) throw std::invalid_argument("DParenState: sum of f must equal k");
    // Size of each unmatched paren: f plus the free integers since the
    // previous unmatched paren (cyclically, on the doubled word).
    std::vector<int> toks;
    for (int r : out.reps) toks.push_back(r);
    for (int r : out.reps) toks.push_back(m + r);
    int t2 = 2 * m;
    for (std::size_t i = 0; i < toks.size(); ++i) {
      int prev = toks[(i + toks.size() - 1) % toks.size()];
      int cur = toks[i];
      int len = (cur - prev + t2) % t2;  // arc (prev, cur]
      int freeCnt = 0;
      for (int w : match.free_integers)
        if (int d = (w - prev + t2) % t2; d >= 1 && d <= len) ++freeCnt;
      int rep = cur <= m ? cur : cur - m;
      if ((freeCnt + p.f.at(rep)) % p.k != 0)
        throw std::invalid_argument("DParenState: unmatched paren size not divisible by k");
    }
  } else if (strict && out.freeElems.empty()) {
    throw std::invalid_argument("DParenState: fully matched datum needs a free integer");
  }
  return out;
}

// Positive inner integer congruent to r + 1 mod k.
int inner_start_elem(int r, int is, int k) {
  return is + (((r + 1 - is) % k) + k) % k;
}

std::optional<DParenState> try_find_dparen(const AnnulusPartition& pi);

}  // namespace

AnnulusPartition AnnulusPartition::make(int n, int k, SignedPartition part) {
  if (n < 2 || k < 1) throw std::invalid_argument("AnnulusPartition: need n >= 2, k >= 1");
  if (part.n != k * n) throw std::invalid_argument("AnnulusPartition: partition must live on +-[kn]");
  AnnulusPartition a;
  a.n = n;
  a.k = k;
  a.part = std::move(part);
  return a;
}

DParenState DParenState::make(int n, int k, ParenState paren, std::map<int, int> f) {
  if (n < 2 || k < 1) throw std::invalid_argument("DParenState: need n >= 2, k >= 1");
  if (paren.n != k * (n - 1))
    throw std::invalid_argument("DParenState: paren word must have length k(n-1)");
  for (const auto& [pos, cnt] : f)
    if (pos < 1 || pos > paren.n || cnt < 1) throw std::invalid_argument("DParenState: bad f entry");
  DParenState d;
  d.n = n;
  d.k = k;
  d.paren = std::move(paren);
  d.f = std::move(f);
  return d;
}

bool in_PkD(const DParenState& p) {
  try {
    pool_and_check(p, true);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

bool in_PkD_bar(const DParenState& p) {
  return in_PkD(p) && static_cast<long long>(p.paren.L.size()) < p.paren.total_rights();
}

std::vector<std::vector<int>> annular_blocks(const AnnulusPartition& pi) {
  int m = pi.m();
  std::vector<std::vector<int>> out;
  for (const auto& rep : pi.part.pairedBlocks) {
    bool outer = false, inner = false;
    for (int v : rep) (std::abs(v) <= m ? outer : inner) = true;
    if (outer && inner) {
      std::vector<int> neg;
      for (int v : rep) neg.push_back(-v);
      std::sort(neg.begin(), neg.end());
      out.push_back(rep);
      out.push_back(std::move(neg));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AnnulusPartition> tau_D(const DParenState& p) {
  Pooled pm = pool_and_check(p, false);
  int m = pm.m, kn = p.k * p.n, is = m + 1, k = p.k;

  auto finish = [&](std::vector<std::vector<int>> extra) {
    std::vector<std::vector<int>> all = pm.blocks;
    for (auto& b : extra) {
      std::sort(b.begin(), b.end());
      all.push_back(std::move(b));
    }
    return AnnulusPartition::make(p.n, p.k, SignedPartition::make(kn, std::move(all)));
  };

  if (pm.reps.empty()) {
    if (!pm.freeElems.empty()) {
      // Zero block: the free integers together with the whole inner circle.
      std::vector<int> zero = pm.freeElems;
      for (int v = is; v <= kn; ++v) {
        zero.push_back(v);
        zero.push_back(-v);
      }
      return {finish({std::move(zero)})};
    }
    // Fully matched, nothing free: the inner circle forms a forced pair,
    // k consecutive inner integers following the last element of any
    // visible block (the residue must not depend on the choice).
    int t2 = 2 * m;
    auto contains = [t2](const MatchedPair& mp, int w) {
      return (w - mp.lpos + t2) % t2 <= (mp.rpos - mp.lpos + t2) % t2;
    };
    auto len = [t2](const MatchedPair& mp) { return (mp.rpos - mp.lpos + t2) % t2 + 1; };
    int residue = -1;
    for (const auto& mp : pm.pairs) {
      bool visible = true;
      for (const auto& other : pm.pairs)
        if (len(other) > len(mp) && contains(other, mp.lpos)) visible = false;
      if (!visible) continue;
      int r = std::abs(elem_of(mp.rpos, m)) % k;
      if (residue == -1) residue = r;
      if (residue != r)
        throw std::invalid_argument("tau_D: visible blocks disagree on the forced inner pair");
    }
    if (residue == -1) throw std::invalid_argument("tau_D: empty datum");
    std::vector<int> B, negB;
    int c = inner_start_elem(residue, is, k);
    for (int i = 0; i < k; ++i, c = next_inner(c, is, kn)) {
      B.push_back(c);
      negB.push_back(-c);
    }
    return {finish({std::move(B), std::move(negB)})};
  }

  if (pm.freeElems.empty()) {
    // One unmatched pair carrying all of f; the inner circle again forms a
    // pair of pure-inner blocks, starting after the paren's own position.
    if (pm.reps.size() != 1 || p.f.at(pm.reps[0]) != k)
      throw std::invalid_argument("tau_D: unmatched parens inconsistent with no free integers");
    int x = pm.reps[0];
    std::vector<int> B, negB;
    int c = inner_start_elem(x % k, is, k);
    for (int i = 0; i < k; ++i, c = next_inner(c, is, kn)) {
      B.push_back(c);
      negB.push_back(-c);
    }
    return {finish({std::move(B), std::move(negB)})};
  }

  // Unmatched parens and free integers: the annular case.  The free
  // integers split into arcs A_1, ..., A_j ending at the unmatched
  // positions x_1 < ... < x_j; block i joins A_i to a run of inner
  // integers, assigned counterclockwise starting with block j.
  const std::vector<int>& xs = pm.reps;
  int j = static_cast<int>(xs.size());
  int t2 = 2 * m;
  std::vector<std::vector<int>> arcs(j);
  for (int i = 0; i < j; ++i) {
    int prev = (i == 0) ? m + xs[j - 1] : xs[i - 1];
    int len = (xs[i] - prev + t2) % t2;
    std::vector<std::pair<int, int>> keyed;  // (steps from prev, element)
    for (int e : pm.freeElems) {
      int d = (widx_of(e, m) - prev + t2) % t2;
      if (d >= 1 && d <= len) keyed.push_back({d, e});
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [d, e] : keyed) arcs[i].push_back(e);
    if (arcs[i].empty())
      throw std::invalid_argument("tau_D: unmatched paren with no free integers in its arc");
  }
  int aLast = arcs[j - 1].back();
  int cur = inner_start_elem(std::abs(aLast) % k, is, k);
  std::vector<std::vector<int>> chunks(j);
  for (int i = j - 1; i >= 0; --i)
    for (int t = 0; t < p.f.at(xs[i]); ++t, cur = next_inner(cur, is, kn)) chunks[i].push_back(cur);

  auto build = [&](int sign) {
    std::vector<std::vector<int>> extra;
    for (int i = 0; i < j; ++i) {
      std::vector<int> B = arcs[i], negB;
      for (int v : chunks[i]) B.push_back(sign * v);
      for (int v : B) negB.push_back(-v);
      extra.push_back(std::move(B));
      extra.push_back(std::move(negB));
    }
    return finish(std::move(extra));
  };
  return {build(+1), build(-1)};
}

namespace {

std::optional<DParenState> try_find_dparen(const AnnulusPartition& pi) {
  int m = pi.m();
  int t2 = 2 * m;
  struct PB {
    std::vector<int> pos;  // word positions of the representative's outer part
    int inner = 0;
    bool done = false;
  };
  std::vector<PB> pbs;
  for (const auto& rep : pi.part.pairedBlocks) {
    PB pb;
    for (int v : rep)
      if (std::abs(v) <= m)
        pb.pos.push_back(widx_of(v, m));
      else
        ++pb.inner;
    if (pb.pos.empty()) continue;  // pure-inner pairs carry no parentheses
    pbs.push_back(std::move(pb));
  }
  std::vector<char> alive(static_cast<std::size_t>(t2) + 1, 1);
  auto mirror = [m, t2](int w) { return w <= m ? w + m : w - m; };
  std::set<int> L, R;
  std::map<int, int> f;
  std::size_t remaining = pbs.size();
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (auto& pb : pbs) {
      if (pb.done) continue;
      std::vector<char> inB(static_cast<std::size_t>(t2) + 1, 0);
      for (int w : pb.pos) inB[w] = 1;
      auto step = [&](int w, int dir) {
        do w = (w - 1 + dir + t2) % t2 + 1;
        while (!alive[w]);
        return w;
      };
      int first = 0, last = 0, boundaries = 0;
      for (int w : pb.pos) {
        if (!inB[step(w, -1)]) {
          ++boundaries;
          first = w;
        }
        if (!inB[step(w, +1)]) last = w;
      }
      if (boundaries != 1) continue;  // not cyclically consecutive yet
      int lrep = std::abs(elem_of(first, m));
      int rrep = std::abs(elem_of(last, m));
      if (pb.inner == 0 && !L.insert(lrep).second) return std::nullopt;
      if (!R.insert(rrep).second) return std::nullopt;
      if (pb.inner > 0) f[rrep] = pb.inner;
      for (int w : pb.pos) {
        alive[w] = 0;
        alive[mirror(w)] = 0;
      }
      pb.done = true;
      --remaining;
      progress = true;
    }
  }
  if (remaining > 0) return std::nullopt;
  try {
    return DParenState::make(pi.n, pi.k,
                             ParenState::make(m, {L.begin(), L.end()}, {{R.begin(), R.end()}}),
                             std::move(f));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

bool is_member_NCkD(const AnnulusPartition& pi) {
  int m = pi.m(), kn = pi.k * pi.n, is = m + 1;
  if (pi.part.has_zero()) {
    // The zero block must contain the whole inner circle and at least two
    // outer integers.
    int outer = 0;
    std::set<int> inner;
    for (int v : pi.part.zeroBlock) (std::abs(v) >= is ? (void)inner.insert(v) : (void)++outer);
    if (static_cast<int>(inner.size()) != 2 * (kn - m) || outer < 2) return false;
  }
  auto d = try_find_dparen(pi);
  if (!d) return false;
  try {
    for (const auto& t : tau_D(*d))
      if (t.part == pi.part) return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
  return false;
}

DParenState find_dparen(const AnnulusPartition& pi) {
  if (!is_member_NCkD(pi)) throw std::invalid_argument("find_dparen: partition not in NC^(k)_D");
  return *try_find_dparen(pi);
}

namespace {

DParenState strip_level(const DParenState& cur, int lev) {
  Pooled pm = pool_and_check(cur, false);
  int m = pm.m;
  std::set<int> L(cur.paren.L.begin(), cur.paren.L.end());
  Matching match = match_parens(doubled(cur.paren));
  for (const auto& mp : match.pairs)
    if (mp.label == lev) L.erase(std::abs(elem_of(mp.lpos, m)));
  std::vector<std::vector<int>> Rs = cur.paren.Rs;
  Rs[lev - 1].clear();

  std::set<int> hasLev, survivors;
  for (auto [w, lab] : match.unmatched_rights)
    (lab == lev ? hasLev : survivors).insert(w <= m ? w : w - m);
  // A position still unmatched at a surviving level keeps its weight in place.
  std::set<int> removed;
  for (int d : hasLev)
    if (!survivors.count(d)) removed.insert(d);
  std::map<int, int> fnew;
  for (int s : survivors) fnew[s] = cur.f.at(s);
  std::vector<int> surv(survivors.begin(), survivors.end());
  for (int d : removed) {
    if (surv.empty()) break;  // the last unmatched parens leave with their f
    auto it = std::upper_bound(surv.begin(), surv.end(), d);
    fnew[it == surv.end() ? surv.front() : *it] += cur.f.at(d);
  }
  return DParenState::make(cur.n, cur.k,
                           ParenState::make(m, {L.begin(), L.end()}, std::move(Rs)),
                           std::move(fnew));
}

}  // namespace

std::vector<AnnulusPartition> tau_D_prime(const DParenState& p, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("tau_D_prime: eps must be +1 or -1");
  if (!in_PkD_bar(p)) throw std::invalid_argument("tau_D_prime: datum not in Pbar^(k)_D");
  int ell = p.paren.ell();
  DParenState cur = p;
  std::vector<AnnulusPartition> chain;
  bool seenAnnular = false;
  for (int i = 1; i <= ell; ++i) {
    std::vector<AnnulusPartition> T = tau_D(cur);
    AnnulusPartition pick;
    if (T.size() == 1) {
      pick = T[0];
    } else if (!seenAnnular) {
      pick = (eps == 1) ? T[0] : T[1];
      seenAnnular = true;
    } else {
      bool above0 = refines(chain.back().part, T[0].part);
      bool above1 = refines(chain.back().part, T[1].part);
      if (above0 == above1) throw std::logic_error("tau_D_prime: ambiguous annular level");
      pick = above0 ? T[0] : T[1];
    }
    if (!chain.empty() && !refines(chain.back().part, pick.part))
      throw std::logic_error("tau_D_prime: levels do not form a multichain");
    chain.push_back(std::move(pick));
    if (i < ell) cur = strip_level(cur, i);
  }
  if (!seenAnnular) throw std::logic_error("tau_D_prime: no annular level produced");
  return chain;
}

std::pair<DParenState, int> tau_D_prime_inv(const std::vector<AnnulusPartition>& chain) {
  if (chain.empty()) throw std::invalid_argument("tau_D_prime_inv: empty chain");
  int n = chain[0].n, k = chain[0].k, m = k * (n - 1);
  int ell = static_cast<int>(chain.size());
  for (const auto& c : chain)
    if (c.n != n || c.k != k)
      throw std::invalid_argument("tau_D_prime_inv: mixed parameters in chain");
  for (const auto& c : chain)
    if (!is_member_NCkD(c)) throw std::invalid_argument("tau_D_prime_inv: level not in NC^(k)_D");
  for (int i = 0; i + 1 < ell; ++i)
    if (!refines(chain[i].part, chain[i + 1].part))
      throw std::invalid_argument("tau_D_prime_inv: not a multichain");
  int j = 0;
  for (int i = 0; i < ell && j == 0; ++i)
    if (!annular_blocks(chain[i]).empty()) j = i + 1;
  if (j == 0) throw std::invalid_argument("tau_D_prime_inv: no annular level");

  std::vector<DParenState> D;
  D.reserve(ell);
  for (const auto& c : chain) D.push_back(find_dparen(c));

  // Assemble the parens top-down from the per-level data.  Level ell
  // contributes its datum verbatim.  Descending to level i, each plain block
  // of pi_i needs a pair of parens: if a left already sits at the block's
  // opening position it came from a coarser block that opens there, and once
  // that block's other constituents close at level i the existing pair nets
  // to exactly this block, so nothing is added; otherwise a fresh left and a
  // level-i right are placed at the block's opening and closing positions.
  // Each annular block of pi_i needs a delimiting unmatched right carrying
  // its weight: if a higher-level unmatched right already sits in the window
  // from the block's last outer integer up to the next integer that is free
  // at level i, that token delimits the block and inherits the weight;
  // otherwise a new level-i right is placed at the block's last outer
  // integer.  The weight assignment computed while processing level 1 is the
  // datum's f.
  std::set<int> L(D[ell - 1].paren.L.begin(), D[ell - 1].paren.L.end());
  std::vector<std::vector<int>> Rs(ell);
  Rs[ell - 1] = D[ell - 1].paren.Rs[0];
  std::map<int, int> f = D[ell - 1].f;
  int t2 = 2 * m;
  for (int i = ell - 1; i >= 1; --i) {
    ParenState suffix = ParenState::make(m, {L.begin(), L.end()}, Rs);
    Matching sm = match_parens(doubled(suffix));
    std::set<int> suffixTok;  // word positions of still-unmatched rights
    for (const auto& ur : sm.unmatched_rights) suffixTok.insert(ur.first);

    Matching dm = match_parens(doubled(D[i - 1].paren));
    std::vector<char> freeAt(t2 + 1, 0);
    for (int w : dm.free_integers) freeAt[w] = 1;

    std::set<std::pair<int, int>> pairPos;  // (open, close) positions, deduped
    for (const auto& mp : dm.pairs)
      pairPos.insert({std::abs(elem_of(mp.lpos, m)), std::abs(elem_of(mp.rpos, m))});
    for (auto [open, close] : pairPos) {
      if (L.count(open)) continue;
      L.insert(open);
      Rs[i - 1].push_back(close);
    }

    std::map<int, int> fnew;
    for (auto [pos, v] : D[i - 1].f) {
      int cover = 0;
      for (int step = 0; step < t2 && cover == 0; ++step) {
        int w = (pos - 1 + step) % t2 + 1;
        if (step > 0 && freeAt[w]) break;
        if (suffixTok.count(w)) cover = w;
      }
      if (cover != 0) {
        fnew[cover <= m ? cover : cover - m] += v;
      } else {
        Rs[i - 1].push_back(pos);
        fnew[pos] = v;
      }
    }
    // A level with annular blocks redistributes all weights over its own
    // delimiters; a level without any leaves the carried weights in place.
    if (!D[i - 1].f.empty()) f = std::move(fnew);
    std::sort(Rs[i - 1].begin(), Rs[i - 1].end());
  }
  ParenState ps = ParenState::make(m, {L.begin(), L.end()}, std::move(Rs));
  DParenState P = DParenState::make(n, k, std::move(ps), std::move(f));

  // The sign labels the two outcomes of the first ambiguous level as seen
  // from the assembled datum, whose token placement can differ from the
  // level's canonical datum; decide it by replaying the forward map.
  for (int eps : {1, -1}) {
    std::vector<AnnulusPartition> back = tau_D_prime(P, eps);
    bool ok = back.size() == chain.size();
    for (std::size_t t = 0; ok && t < back.size(); ++t) ok = back[t].part == chain[t].part;
    if (ok) return {P, eps};
  }
  throw std::logic_error("tau_D_prime_inv: assembled datum does not reproduce the chain");
}

std::vector<AnnulusPartition> enumerate_NCkD(int n, int k) {
  if (n < 2 || k < 1) throw std::invalid_argument("enumerate_NCkD: need n >= 2, k >= 1");
  int kn = k * n;
  int limit = 10;
  if (const char* env = std::getenv("NCPART_MAX_GROUND"))
    limit = std::max(limit, std::atoi(env));
  if (kn > limit) throw std::invalid_argument("enumerate_NCkD: kn too large for brute force");
  std::vector<AnnulusPartition> out;
  for (auto& sp : enumerate_signed_partitions(kn)) {
    AnnulusPartition a = AnnulusPartition::make(n, k, std::move(sp));
    if (is_member_NCkD(a)) out.push_back(std::move(a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpart
