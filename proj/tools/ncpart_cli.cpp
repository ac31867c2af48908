// Command-line front end: enumeration, multichain counting, zeta values,
// closed-form verification, and bijection round-trips for the noncrossing
// partition families.
//
// Exit codes: 0 success (and, for verify/bijection, everything matched);
// 1 a verification mismatch or round-trip failure; 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "ncpart/annulus.hpp"
#include "ncpart/bpair.hpp"
#include "ncpart/counting.hpp"
#include "ncpart/families.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/json_io.hpp"
#include "ncpart/paren.hpp"
#include "ncpart/verify.hpp"

namespace {

using namespace ncpart;
using nlohmann::json;

std::vector<long long> parse_csv_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

FamilyKind parse_family(const std::string& name) {
  if (name == "A") return FamilyKind::A;
  if (name == "B") return FamilyKind::B;
  if (name == "D") return FamilyKind::D;
  if (name == "AugA") return FamilyKind::AugA;
  if (name == "TildeA") return FamilyKind::TildeA;
  throw std::invalid_argument("unknown family '" + name + "' (expected A|B|D|AugA|TildeA)");
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw std::invalid_argument("expected true or false, got '" + s + "'");
}

std::string format_blocks(const std::vector<std::vector<int>>& blocks) {
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) os << " | ";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) os << ',';
      os << blocks[b][i];
    }
  }
  os << '}';
  return os.str();
}

std::vector<std::vector<int>> blocks_of(const FamilyElement& e) {
  if (std::holds_alternative<SetPartition>(e.value))
    return std::get<SetPartition>(e.value).blocks;
  return std::get<SignedPartition>(e.value).all_blocks();
}

// Fixed parameters some statements impose on a sweep.
bool formula_fixes_k1(FormulaId id) {
  switch (id) {
    case FormulaId::EQ7:
    case FormulaId::EQ8:
    case FormulaId::EQ9:
    case FormulaId::EQ10:
    case FormulaId::EQ11:
    case FormulaId::EQ14:
      return true;
    default:
      return false;
  }
}

bool formula_fixes_ell1(FormulaId id) {
  switch (id) {
    case FormulaId::EQ8:
    case FormulaId::EQ9:
    case FormulaId::EQ10:
    case FormulaId::EQ11:
      return true;
    default:
      return false;
  }
}

bool formula_needs_r(FormulaId id) {
  switch (id) {
    case FormulaId::AUG_TYPE:
    case FormulaId::AUG_RANK:
    case FormulaId::AUG_ZETA:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Noncrossing partition families (types A, B, D; k-divisible, augmented, and "
      "centrally symmetric variants): enumeration, multichain counting, bijection "
      "round-trips, and closed-form verification."};
  app.require_subcommand(1);

  std::string family = "A";
  int n = 1, k = 1, r = 0, ell = 1;
  std::string jumpsCsv, ktypeCsv, annularStr;
  long long indexD = 0;
  std::string output = "json", outPath, idStr, paramsFile, casesInline;
  int maxGround = 0, maxN = 4, maxK = 2, maxL = 2, maxKn = 8;

  CLI::Option *jumpsOpt = nullptr, *ktypeOpt = nullptr, *indexOpt = nullptr,
              *annularOpt = nullptr;
  CLI::Option *vN = nullptr, *vK = nullptr, *vR = nullptr, *vL = nullptr;

  auto add_shared = [&](CLI::App* sub, bool withOutput) {
    sub->add_option("--out", outPath, "Write output to this file instead of stdout");
    sub->add_option("--max-ground", maxGround,
                    "Raise the ground-set scale guard (exported as NCPART_MAX_GROUND)");
    if (withOutput) sub->add_option("--output", output, "Output format");
  };
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--family", family, "Family: A|B|D|AugA|TildeA");
    sub->add_option("--n", n, "Family parameter n");
    sub->add_option("--k", k, "Divisibility parameter k");
    sub->add_option("--r", r, "Remainder r (augmented family only, 0 < r < k)");
  };

  CLI::App* cmdEnum = app.add_subcommand("enumerate", "List every member of a family");
  add_spec(cmdEnum);
  add_shared(cmdEnum, true);

  CLI::App* cmdChains =
      app.add_subcommand("chains", "Count ell-multichains under optional filters");
  add_spec(cmdChains);
  cmdChains->add_option("--l", ell, "Multichain length ell (>= 1)");
  jumpsOpt = cmdChains->add_option("--jumps", jumpsCsv,
                                   "Rank-jump vector s_1,...,s_{ell+1} (comma separated)");
  ktypeOpt = cmdChains->add_option(
      "--ktype", ktypeCsv, "k-type census b_1,...,b_n of the bottom element (comma separated)");
  indexOpt = cmdChains->add_option("--index", indexD,
                                   "Zero-block index d in [1, ell+1] (families B and D)");
  annularOpt = cmdChains->add_option("--annular", annularStr,
                                     "true/false: require/forbid an annular level (family D)");
  add_shared(cmdChains, true);

  CLI::App* cmdZeta = app.add_subcommand("zeta", "Zeta polynomial value: number of ell-multichains");
  add_spec(cmdZeta);
  cmdZeta->add_option("--l", ell, "Multichain length ell (>= 1)");
  add_shared(cmdZeta, true);

  CLI::App* cmdVerify =
      app.add_subcommand("verify", "Cross-check one closed form against brute-force counts");
  cmdVerify->add_option("--id", idStr,
                        "Formula id: EQ1,EQ2,EQ7-EQ14,THM-A,THM-B,THM-D,INDEX,AUG-TYPE,"
                        "AUG-RANK,AUG-ZETA,TILDE-TYPE,TILDE-RANK,TILDE-ZETA,D-ANNULAR")
      ->required();
  vN = cmdVerify->add_option("--n", n, "Single case: n");
  vK = cmdVerify->add_option("--k", k, "Single case: k");
  vR = cmdVerify->add_option("--r", r, "Single case: r");
  vL = cmdVerify->add_option("--l", ell, "Single case: ell");
  cmdVerify->add_option("--max-n", maxN, "Sweep bound on n (default 4)");
  cmdVerify->add_option("--max-k", maxK, "Sweep bound on k (default 2)");
  cmdVerify->add_option("--max-l", maxL, "Sweep bound on ell (default 2)");
  cmdVerify->add_option("--max-kn", maxKn, "Sweep bound on the ground-set size (default 8)");
  cmdVerify->add_option("--params-file", paramsFile,
                        "JSON file with an array of {n,k,r,ell} objects");
  cmdVerify->add_option("--cases", casesInline, "Inline JSON array of {n,k,r,ell} objects");
  add_shared(cmdVerify, true);

  CLI::App* cmdBij = app.add_subcommand(
      "bijection", "Round-trip the structural bijections over a whole family");
  cmdBij->add_option("--family", family, "Family: A (parenthesizations), B, or D");
  cmdBij->add_option("--n", n, "Family parameter n");
  cmdBij->add_option("--k", k, "Divisibility parameter k (family D)");
  cmdBij->add_option("--l", ell, "Chain length for the multichain bijections");
  add_shared(cmdBij, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (maxGround > 0)
      setenv("NCPART_MAX_GROUND", std::to_string(maxGround).c_str(), 1);

    std::ofstream ofs;
    std::ostream* osp = &std::cout;
    if (!outPath.empty()) {
      ofs.open(outPath);
      if (!ofs) throw std::runtime_error("cannot open output file '" + outPath + "'");
      osp = &ofs;
    }
    std::ostream& os = *osp;

    if (cmdEnum->parsed()) {
      FamilySpec spec{parse_family(family), n, k, r};
      Family fam = enumerate_family(spec);
      if (output == "json") {
        for (std::size_t i = 0; i < fam.size(); ++i) {
          const FamilyElement& e = fam.elems[i];
          json j;
          j["index"] = i;
          j["family"] = family_name(spec.family);
          j["rank"] = e.rank;
          j["ktype"] = e.ktype ? to_json(*e.ktype) : json(nullptr);
          j["hasZero"] = e.hasZero;
          j["annular"] = e.isAnnular;
          std::visit([&](const auto& v) { j["value"] = to_json(v); }, e.value);
          os << j.dump() << "\n";
        }
      } else if (output == "table") {
        os << "# family " << family_name(spec.family) << " n=" << spec.n << " k=" << spec.k;
        if (spec.family == FamilyKind::AugA) os << " r=" << spec.r;
        os << "  size=" << fam.size() << " maxRank=" << fam.maxRank << "\n";
        for (std::size_t i = 0; i < fam.size(); ++i) {
          const FamilyElement& e = fam.elems[i];
          os << i << "\trank=" << e.rank << "\t" << format_blocks(blocks_of(e));
          if (e.hasZero) os << "\t[zero]";
          if (e.isAnnular) os << "\t[annular]";
          os << "\n";
        }
      } else {
        throw std::invalid_argument("enumerate supports --output json|table");
      }
      return 0;
    }

    if (cmdChains->parsed() || cmdZeta->parsed()) {
      FamilySpec spec{parse_family(family), n, k, r};
      CountQuery q;
      q.spec = spec;
      q.ell = ell;
      if (cmdChains->parsed()) {
        if (jumpsOpt->count()) q.jumps = parse_csv_list(jumpsCsv);
        if (ktypeOpt->count()) {
          TypeVector tv;
          tv.counts = parse_csv_list(ktypeCsv);
          tv.b = 0;
          for (long long c : tv.counts) tv.b += c;
          q.ktype1 = tv;
        }
        if (indexOpt->count()) q.index = indexD;
        if (annularOpt->count()) q.annularAny = parse_bool(annularStr);
      }
      Family fam = enumerate_family(spec);
      BigInt count = count_multichains(fam, q);
      if (output == "json") {
        json j;
        j["query"] = to_json(q);
        j[cmdZeta->parsed() ? "zeta" : "count"] = to_string(count);
        os << j.dump() << "\n";
      } else if (output == "table") {
        os << (cmdZeta->parsed() ? "zeta" : "count") << " = " << to_string(count) << "\n";
      } else {
        throw std::invalid_argument("chains/zeta support --output json|table");
      }
      return 0;
    }

    if (cmdVerify->parsed()) {
      std::optional<FormulaId> id = parse_formula_id(idStr);
      if (!id) throw std::invalid_argument("unknown formula id '" + idStr + "'");

      std::vector<VerifyCase> cases;
      if (!paramsFile.empty() || !casesInline.empty()) {
        json arr;
        if (!paramsFile.empty()) {
          std::ifstream in(paramsFile);
          if (!in) throw std::runtime_error("cannot read params file '" + paramsFile + "'");
          in >> arr;
        } else {
          arr = json::parse(casesInline);
        }
        if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of cases");
        for (const json& j : arr) {
          VerifyCase vc;
          vc.n = j.value("n", 1LL);
          vc.k = j.value("k", 1LL);
          vc.r = j.value("r", 0LL);
          vc.ell = j.value("ell", 1);
          cases.push_back(vc);
        }
      } else if (vN->count() || vK->count() || vR->count() || vL->count()) {
        cases.push_back(VerifyCase{n, k, r, ell});
      } else {
        for (int cn = 1; cn <= maxN; ++cn)
          for (int ck = 1; ck <= maxK; ++ck) {
            if (formula_fixes_k1(*id) && ck != 1) continue;
            for (int cl = 1; cl <= maxL; ++cl) {
              if (formula_fixes_ell1(*id) && cl != 1) continue;
              std::vector<int> rs;
              if (formula_needs_r(*id))
                for (int cr = 1; cr < ck; ++cr) rs.push_back(cr);
              else
                rs.push_back(0);
              for (int cr : rs) {
                VerifyCase vc{cn, ck, cr, cl};
                FamilySpec spec = verify_family(*id, vc);
                if (spec.family == FamilyKind::D && spec.n < 2) continue;
                int g = ground_size(spec);
                if (g > maxKn || g > ground_limit()) continue;
                cases.push_back(vc);
              }
            }
          }
      }

      std::vector<CountReport> reports;
      for (const VerifyCase& vc : cases) {
        std::vector<CountReport> reps = verify_formula(*id, vc);
        reports.insert(reports.end(), reps.begin(), reps.end());
      }
      bool ok = all_match(reports);

      if (output == "json") {
        json j;
        j["id"] = formula_id_name(*id);
        j["cases"] = cases.size();
        j["allMatch"] = ok;
        json arr = json::array();
        for (const CountReport& rep : reports) arr.push_back(to_json(rep));
        j["reports"] = arr;
        os << j.dump() << "\n";
      } else if (output == "csv") {
        os << csv_header() << "\n";
        for (const CountReport& rep : reports) os << csv_row(rep) << "\n";
      } else if (output == "table") {
        int bad = 0;
        for (const CountReport& rep : reports) {
          if (!rep.match) ++bad;
          os << (rep.match ? "   ok " : "FAIL  ") << csv_row(rep) << "\n";
        }
        os << formula_id_name(*id) << ": " << reports.size() << " buckets over " << cases.size()
           << " cases, " << (ok ? "all match" : std::to_string(bad) + " mismatches") << "\n";
      } else {
        throw std::invalid_argument("verify supports --output json|csv|table");
      }
      return ok ? 0 : 1;
    }

    if (cmdBij->parsed()) {
      FamilyKind fk = parse_family(family);
      bool ok = true;
      if (fk == FamilyKind::B) {
        std::vector<SignedPartition> elems = enumerate_NCB(n);
        std::size_t good = 0;
        for (const SignedPartition& p : elems) {
          BPair bp = psi(p);
          if (psi_inv(bp) == p && classify_x(p) == bp.x) ++good;
        }
        ok = good == elems.size();
        os << "C(" << 2 * n << "," << n << ")=" << elems.size() << " elements, " << good << "/"
           << elems.size() << " round-trips ok\n";
      } else if (fk == FamilyKind::A) {
        std::vector<ParenState> p1 = enumerate_P(n, 1);
        std::size_t dom = 0, good = 0;
        for (const ParenState& p : p1) {
          if (!in_Pbar(p)) continue;
          ++dom;
          auto [B, pi] = tau(p);
          if (tau_inv(B, pi) == p) ++good;
        }
        ok = good == dom;
        os << "Pbar(" << n << ",1): " << dom << " elements, " << good << "/" << dom
           << " tau round-trips ok\n";
        if (ell > 1) {
          std::vector<ParenState> pl = enumerate_P(n, ell);
          std::size_t domL = 0, goodL = 0;
          for (const ParenState& p : pl) {
            if (!in_Pbar(p)) continue;
            ++domL;
            auto [B, chain] = tau_prime(p);
            if (tau_prime_inv(B, chain) == p) ++goodL;
          }
          ok = ok && goodL == domL;
          os << "Pbar(" << n << "," << ell << "): " << domL << " elements, " << goodL << "/"
             << domL << " tau-prime round-trips ok\n";
        }
      } else if (fk == FamilyKind::D) {
        std::vector<AnnulusPartition> members = enumerate_NCkD(n, k);
        std::size_t good = 0;
        for (const AnnulusPartition& m : members) {
          DParenState d = find_dparen(m);
          bool hit = false;
          for (const AnnulusPartition& img : tau_D(d))
            if (img == m) hit = true;
          if (hit) ++good;
        }
        ok = good == members.size();
        os << "NC_D^(" << k << ")(" << n << "): " << members.size() << " elements, " << good
           << "/" << members.size() << " datum round-trips ok\n";

        Family fam = enumerate_family(FamilySpec{FamilyKind::D, n, k, 0});
        std::size_t chains = 0, goodC = 0;
        for_each_multichain(fam, ell, [&](const std::vector<int>& idx) {
          bool annular = false;
          for (int i : idx) annular = annular || fam.elems[i].isAnnular;
          if (!annular) return;
          ++chains;
          std::vector<AnnulusPartition> chain;
          for (int i : idx)
            chain.push_back(
                AnnulusPartition::make(n, k, std::get<SignedPartition>(fam.elems[i].value)));
          auto [dp, eps] = tau_D_prime_inv(chain);
          std::vector<AnnulusPartition> back = tau_D_prime(dp, eps);
          if (back == chain) ++goodC;
        });
        ok = ok && goodC == chains;
        os << "annular " << ell << "-chains: " << chains << " chains, " << goodC << "/" << chains
           << " tau-D-prime round-trips ok\n";
      } else {
        throw std::invalid_argument("bijection supports --family A|B|D");
      }
      return ok ? 0 : 1;
    }

    throw std::invalid_argument("no command selected");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
