#include "ncpart/formulas.hpp"

#include <stdexcept>
#include <utility>

namespace ncpart {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("eval_formula: " + what);
}

void need(bool cond, const char* what) {
  if (!cond) fail(what);
}

BigInt mult_of(const TypeVector& tv) { return multinomial(tv.b, tv.counts); }

// The same census with one size-1 block removed: (b-1; b_1 - 1, b_2, ...).
BigInt mult_drop_singleton(const TypeVector& tv) {
  std::vector<long long> parts = tv.counts;
  if (parts.empty()) parts.push_back(0);
  parts[0] -= 1;
  return multinomial(tv.b - 1, parts);
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (num == 0) return 0;
  if (den == 0 || num % den != 0)
    throw std::logic_error(std::string("eval_formula: non-exact division in ") + what);
  return num / den;
}

long long sum_of(const RankJumpVector& s) {
  long long t = 0;
  for (long long v : s) t += v;
  return t;
}

const RankJumpVector& get_jumps(const FormulaParams& p) {
  need(p.jumps.has_value(), "missing rank-jump vector");
  need(static_cast<int>(p.jumps->size()) == p.ell + 1, "jump vector must have length ell + 1");
  for (long long v : *p.jumps) need(v >= 0, "rank jumps must be nonnegative");
  return *p.jumps;
}

const TypeVector& get_type(const FormulaParams& p) {
  need(p.type.has_value(), "missing type census");
  need(p.type->consistent(), "type census needs b = sum b_i and b_i >= 0");
  return *p.type;
}

}  // namespace

std::optional<FormulaId> parse_formula_id(const std::string& name) {
  for (FormulaId id : all_formula_ids())
    if (formula_id_name(id) == name) return id;
  return std::nullopt;
}

std::string formula_id_name(FormulaId id) {
  switch (id) {
    case FormulaId::EQ1: return "EQ1";
    case FormulaId::EQ2: return "EQ2";
    case FormulaId::EQ7: return "EQ7";
    case FormulaId::EQ8: return "EQ8";
    case FormulaId::EQ9: return "EQ9";
    case FormulaId::EQ10: return "EQ10";
    case FormulaId::EQ11: return "EQ11";
    case FormulaId::EQ12: return "EQ12";
    case FormulaId::EQ13: return "EQ13";
    case FormulaId::EQ14: return "EQ14";
    case FormulaId::THM_A: return "THM-A";
    case FormulaId::THM_B: return "THM-B";
    case FormulaId::THM_D: return "THM-D";
    case FormulaId::INDEX: return "INDEX";
    case FormulaId::AUG_TYPE: return "AUG-TYPE";
    case FormulaId::AUG_RANK: return "AUG-RANK";
    case FormulaId::AUG_ZETA: return "AUG-ZETA";
    case FormulaId::TILDE_TYPE: return "TILDE-TYPE";
    case FormulaId::TILDE_RANK: return "TILDE-RANK";
    case FormulaId::TILDE_ZETA: return "TILDE-ZETA";
    case FormulaId::D_ANNULAR: return "D-ANNULAR";
  }
  return "?";
}

const std::vector<FormulaId>& all_formula_ids() {
  static const std::vector<FormulaId> ids = {
      FormulaId::EQ1,
      FormulaId::EQ2,
      FormulaId::EQ7,
      FormulaId::EQ8,
      FormulaId::EQ9,
      FormulaId::EQ10,
      FormulaId::EQ11,
      FormulaId::EQ12,
      FormulaId::EQ13,
      FormulaId::EQ14,
      FormulaId::THM_A,
      FormulaId::THM_B,
      FormulaId::THM_D,
      FormulaId::INDEX,
      FormulaId::AUG_TYPE,
      FormulaId::AUG_RANK,
      FormulaId::AUG_ZETA,
      FormulaId::TILDE_TYPE,
      FormulaId::TILDE_RANK,
      FormulaId::TILDE_ZETA,
      FormulaId::D_ANNULAR,
  };
  return ids;
}

BigInt eval_formula(FormulaId id, const FormulaParams& p) {
  const long long n = p.n, k = p.k, r = p.r;
  const int ell = p.ell;
  need(n >= 1, "n must be >= 1");
  need(k >= 1, "k must be >= 1");
  need(ell >= 1, "ell must be >= 1");

  switch (id) {
    case FormulaId::EQ1: {
      const auto& s = get_jumps(p);
      need(sum_of(s) == n - 1, "rank jumps must sum to n - 1");
      BigInt v = binomial(n, s[0]);
      for (int i = 1; i <= ell; ++i) v *= binomial(k * n, s[i]);
      return exact_div(v, n, "EQ1");
    }
    case FormulaId::EQ2: {
      const auto& s = get_jumps(p);
      need(sum_of(s) == n, "rank jumps must sum to n");
      BigInt v = binomial(n, s[0]);
      for (int i = 1; i <= ell; ++i) v *= binomial(k * n, s[i]);
      return v;
    }
    case FormulaId::EQ7: {
      need(k == 1, "EQ7 is the k = 1 type D count");
      need(n >= 2, "type D needs n >= 2");
      const auto& s = get_jumps(p);
      need(sum_of(s) == n, "rank jumps must sum to n");
      BigInt first = 2;
      for (int i = 0; i <= ell; ++i) first *= binomial(n - 1, s[i]);
      BigInt second = 0;
      for (int i = 0; i <= ell; ++i) {
        BigInt t = 1;
        for (int j = 0; j <= ell; ++j)
          t *= (j == i) ? binomial(n - 2, s[j] - 2) : binomial(n - 1, s[j]);
        second += t;
      }
      return first + second;
    }
    case FormulaId::EQ8: {
      need(k == 1, "EQ8 is the k = 1 type A census");
      need(ell == 1, "EQ8 is an ell = 1 census");
      const auto& tv = get_type(p);
      need(tv.weighted_sum() == n, "type census must satisfy sum i*b_i = n");
      return exact_div(mult_of(tv) * binomial(n, tv.b - 1), tv.b, "EQ8");
    }
    case FormulaId::EQ9: {
      need(k == 1, "EQ9 is the k = 1 type B census");
      need(ell == 1, "EQ9 is an ell = 1 census");
      const auto& tv = get_type(p);
      need(tv.weighted_sum() <= n, "type census must satisfy sum i*b_i <= n");
      return mult_of(tv) * binomial(n, tv.b);
    }
    case FormulaId::EQ10: {
      need(k == 1, "EQ10 is the k = 1 type D census");
      need(ell == 1, "EQ10 is an ell = 1 census");
      need(n >= 2, "type D needs n >= 2");
      const auto& tv = get_type(p);
      need(tv.weighted_sum() <= n - 2, "zero-block type census needs sum i*b_i <= n - 2");
      return mult_of(tv) * binomial(n - 1, tv.b);
    }
    case FormulaId::EQ11: {
      need(k == 1, "EQ11 is the k = 1 type D census");
      need(ell == 1, "EQ11 is an ell = 1 census");
      need(n >= 2, "type D needs n >= 2");
      const auto& tv = get_type(p);
      need(tv.weighted_sum() == n, "type census must satisfy sum i*b_i = n");
      return 2 * mult_of(tv) * binomial(n - 1, tv.b) +
             mult_drop_singleton(tv) * binomial(n - 1, tv.b - 1);
    }
    case FormulaId::EQ12: {
      const auto& tv = get_type(p);
      need(tv.weighted_sum() == n, "type census must satisfy sum i*b_i = n");
      return exact_div(mult_of(tv) * binomial(static_cast<long long>(ell) * k * n, tv.b - 1),
                       tv.b, "EQ12");
    }
    case FormulaId::EQ13: {
      const auto& tv = get_type(p);
      need(tv.weighted_sum() <= n, "type census must satisfy sum i*b_i <= n");
      return mult_of(tv) * binomial(static_cast<long long>(ell) * k * n, tv.b);
    }
    case FormulaId::EQ14: {
      need(k == 1, "EQ14 is the k = 1 type B index count");
      need(p.d.has_value(), "missing zero-block index d");
      long long d = *p.d;
      need(1 <= d && d <= ell + 1, "index d must lie in [1, ell + 1]");
      const auto& s = get_jumps(p);
      need(sum_of(s) == n, "rank jumps must sum to n");
      BigInt v = s[d - 1];
      for (int i = 0; i <= ell; ++i) v *= binomial(n, s[i]);
      return exact_div(v, n, "EQ14");
    }
    case FormulaId::THM_A: {
      const auto& tv = get_type(p);
      const auto& s = get_jumps(p);
      need(tv.weighted_sum() == n, "type census must satisfy sum i*b_i = n");
      need(sum_of(s) == n - 1, "rank jumps must sum to n - 1");
      need(s[0] == n - tv.b, "s_1 must equal n - b");
      BigInt v = mult_of(tv);
      for (int i = 1; i <= ell; ++i) v *= binomial(k * n, s[i]);
      return exact_div(v, tv.b, "THM-A");
    }
    case FormulaId::THM_B: {
      const auto& tv = get_type(p);
      const auto& s = get_jumps(p);
      need(tv.weighted_sum() <= n, "type census must satisfy sum i*b_i <= n");
      need(sum_of(s) == n, "rank jumps must sum to n");
      need(s[0] == n - tv.b, "s_1 must equal n - b");
      BigInt v = mult_of(tv);
      for (int i = 1; i <= ell; ++i) v *= binomial(k * n, s[i]);
      return v;
    }
    case FormulaId::THM_D: {
      need(n >= 2, "type D needs n >= 2");
      const auto& tv = get_type(p);
      const auto& s = get_jumps(p);
      long long w = tv.weighted_sum();
      need(w <= n && w != n - 1, "type D census needs sum i*b_i <= n - 2 or = n");
      need(sum_of(s) == n, "rank jumps must sum to n");
      need(s[0] == n - tv.b, "s_1 must equal n - b");
      long long kk = k * (n - 1);
      if (w <= n - 2) {
        BigInt v = mult_of(tv);
        for (int i = 1; i <= ell; ++i) v *= binomial(kk, s[i]);
        return v;
      }
      BigInt v = 2 * mult_of(tv);
      for (int i = 1; i <= ell; ++i) v *= binomial(kk, s[i]);
      BigInt m2 = mult_drop_singleton(tv);
      for (int i = 1; i <= ell; ++i) {
        BigInt t = m2 * (s[i] - 1);
        for (int j = 1; j <= ell; ++j) t *= binomial(kk, (j == i) ? s[j] - 1 : s[j]);
        v += exact_div(t, tv.b - 1, "THM-D");
      }
      return v;
    }
    case FormulaId::INDEX: {
      need(p.d.has_value(), "missing zero-block index d");
      long long d = *p.d;
      need(1 <= d && d <= ell + 1, "index d must lie in [1, ell + 1]");
      const auto& tv = get_type(p);
      const auto& s = get_jumps(p);
      long long w = tv.weighted_sum();
      need(w <= n, "type census must satisfy sum i*b_i <= n");
      need(d == 1 ? w < n : w == n,
           "index 1 needs a zero block at the bottom (sum i*b_i < n); larger indices need none");
      need(sum_of(s) == n, "rank jumps must sum to n");
      need(s[0] == n - tv.b, "s_1 must equal n - b");
      BigInt v = mult_of(tv);
      for (int i = 1; i <= ell; ++i) v *= binomial(k * n, s[i]);
      if (d == 1) return v;
      return exact_div(v * s[d - 1], tv.b, "INDEX");
    }
    case FormulaId::AUG_TYPE:
    case FormulaId::TILDE_TYPE: {
      long long g = (id == FormulaId::AUG_TYPE) ? k * n + r : 2 * k * n + k;
      if (id == FormulaId::AUG_TYPE) need(0 < r && r < k, "augmented family needs 0 < r < k");
      const auto& tv = get_type(p);
      const auto& s = get_jumps(p);
      need(tv.weighted_sum() <= n, "type census must satisfy sum i*b_i <= n");
      need(sum_of(s) == n, "rank jumps must sum to n");
      need(s[0] == n - tv.b, "s_1 must equal n - b");
      BigInt v = mult_of(tv);
      for (int i = 1; i <= ell; ++i) v *= binomial(g, s[i]);
      return v;
    }
    case FormulaId::AUG_RANK:
    case FormulaId::TILDE_RANK: {
      long long g = (id == FormulaId::AUG_RANK) ? k * n + r : 2 * k * n + k;
      if (id == FormulaId::AUG_RANK) need(0 < r && r < k, "augmented family needs 0 < r < k");
      const auto& s = get_jumps(p);
      need(sum_of(s) == n, "rank jumps must sum to n");
      BigInt v = binomial(n, s[0]);
      for (int i = 1; i <= ell; ++i) v *= binomial(g, s[i]);
      return v;
    }
    case FormulaId::AUG_ZETA:
    case FormulaId::TILDE_ZETA: {
      long long g = (id == FormulaId::AUG_ZETA) ? k * n + r : 2 * k * n + k;
      if (id == FormulaId::AUG_ZETA) need(0 < r && r < k, "augmented family needs 0 < r < k");
      return binomial(n + static_cast<long long>(ell) * g, n);
    }
    case FormulaId::D_ANNULAR: {
      need(n >= 2, "type D needs n >= 2");
      const auto& tv = get_type(p);
      const auto& s = get_jumps(p);
      need(tv.weighted_sum() == n, "annular count needs sum i*b_i = n");
      need(sum_of(s) == n, "rank jumps must sum to n");
      need(s[0] == n - tv.b, "s_1 must equal n - b");
      BigInt v = 2 * mult_of(tv);
      for (int i = 1; i <= ell; ++i) v *= binomial(k * (n - 1), s[i]);
      return v;
    }
  }
  fail("unknown formula id");
}

}  // namespace ncpart
