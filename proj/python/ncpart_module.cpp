// Python bindings: thin wrappers that speak in plain values (ints, lists,
// dicts) and JSON-shaped dictionaries identical to the CLI output.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ncpart/annulus.hpp"
#include "ncpart/bigint.hpp"
#include "ncpart/bpair.hpp"
#include "ncpart/counting.hpp"
#include "ncpart/families.hpp"
#include "ncpart/formulas.hpp"
#include "ncpart/json_io.hpp"
#include "ncpart/paren.hpp"
#include "ncpart/verify.hpp"

namespace py = pybind11;
using namespace ncpart;

namespace {

py::object py_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// BigInt -> arbitrary-precision Python int.
py::object big(const BigInt& v) {
  const std::string s = to_string(v);
  PyObject* o = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!o) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(o);
}

FamilySpec spec_of(const std::string& family, int n, int k, int r) {
  for (FamilyKind kind : {FamilyKind::A, FamilyKind::B, FamilyKind::D,
                          FamilyKind::AugA, FamilyKind::TildeA})
    if (family_name(kind) == family) return FamilySpec{kind, n, k, r};
  throw std::invalid_argument("unknown family: " + family +
                              " (expected A, B, D, AugA, or TildeA)");
}

std::optional<TypeVector> type_arg(const py::object& o) {
  if (o.is_none()) return std::nullopt;
  TypeVector tv;
  if (py::isinstance<py::dict>(o)) {
    py::dict d = o.cast<py::dict>();
    tv.b = d["b"].cast<long long>();
    tv.counts = d["counts"].cast<std::vector<long long>>();
  } else {
    auto [b, counts] = o.cast<std::pair<long long, std::vector<long long>>>();
    tv.b = b;
    tv.counts = std::move(counts);
  }
  return tv;
}

// Inner-weight map; accepts both int and string (JSON-style) keys.
std::map<int, int> f_arg(const py::dict& d) {
  std::map<int, int> f;
  for (auto item : d) {
    int pos;
    try {
      pos = item.first.cast<int>();
    } catch (const py::cast_error&) {
      pos = std::stoi(item.first.cast<std::string>());
    }
    f[pos] = item.second.cast<int>();
  }
  return f;
}

py::dict spec_dict(const FamilySpec& s) {
  py::dict d;
  d["family"] = family_name(s.family);
  d["n"] = s.n;
  d["k"] = s.k;
  d["r"] = s.r;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ncpart, m) {
  m.doc() =
      "Noncrossing partitions of Coxeter types A, B, and D: enumeration, "
      "multichain counting, closed-form evaluation, and bijections.";

  // --- numbers -------------------------------------------------------------
  m.def(
      "catalan", [](long long n) { return big(catalan(n)); }, py::arg("n"));
  m.def(
      "fuss_catalan",
      [](long long k, long long n) { return big(fuss_catalan(k, n)); },
      py::arg("k"), py::arg("n"));
  m.def(
      "binomial",
      [](long long n, long long k) { return big(binomial(n, k)); },
      py::arg("n"), py::arg("k"));

  // --- families ------------------------------------------------------------
  m.def(
      "family_size",
      [](const std::string& family, int n, int k, int r) {
        return enumerate_family(spec_of(family, n, k, r)).size();
      },
      py::arg("family"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0);

  m.def(
      "enumerate_family",
      [](const std::string& family, int n, int k, int r) {
        Family fam = enumerate_family(spec_of(family, n, k, r));
        py::list out;
        for (const FamilyElement& e : fam.elems) {
          nlohmann::json v =
              std::holds_alternative<SetPartition>(e.value)
                  ? to_json(std::get<SetPartition>(e.value))
                  : to_json(std::get<SignedPartition>(e.value));
          py::dict d;
          d["value"] = py_json(v);
          d["rank"] = e.rank;
          d["ktype"] = e.ktype ? static_cast<py::object>(py_json(to_json(*e.ktype)))
                               : static_cast<py::object>(py::none());
          d["hasZero"] = e.hasZero;
          d["isAnnular"] = e.isAnnular;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      "Every family element as a dict with value, rank, ktype, hasZero, "
      "isAnnular.");

  // --- counting ------------------------------------------------------------
  m.def(
      "zeta",
      [](const std::string& family, int n, int k, int r, int ell) {
        Family fam = enumerate_family(spec_of(family, n, k, r));
        return big(zeta_value(fam, ell));
      },
      py::arg("family"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      py::arg("ell") = 1, "Number of ell-multichains in the family.");

  m.def(
      "count_chains",
      [](const std::string& family, int n, int k, int r, int ell,
         const py::object& jumps, const py::object& ktype,
         const py::object& index, const py::object& annular_any) {
        Family fam = enumerate_family(spec_of(family, n, k, r));
        CountQuery q;
        q.spec = fam.spec;
        q.ell = ell;
        if (!jumps.is_none()) q.jumps = jumps.cast<RankJumpVector>();
        q.ktype1 = type_arg(ktype);
        if (!index.is_none()) q.index = index.cast<long long>();
        if (!annular_any.is_none()) q.annularAny = annular_any.cast<bool>();
        return big(count_multichains(fam, q));
      },
      py::arg("family"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      py::arg("ell") = 1, py::arg("jumps") = py::none(),
      py::arg("ktype") = py::none(), py::arg("index") = py::none(),
      py::arg("annular_any") = py::none(),
      "Multichains filtered by rank-jump vector, bottom k-type, zero-block "
      "index, and annular flag.");

  // --- closed forms ---------------------------------------------------------
  m.def("formula_ids", []() {
    std::vector<std::string> out;
    for (FormulaId id : all_formula_ids()) out.push_back(formula_id_name(id));
    return out;
  });

  m.def(
      "eval_formula",
      [](const std::string& id, long long n, long long k, long long r, int ell,
         const py::object& jumps, const py::object& ktype,
         const py::object& d) {
        auto pid = parse_formula_id(id);
        if (!pid) throw std::invalid_argument("unknown formula id: " + id);
        FormulaParams p;
        p.n = n;
        p.k = k;
        p.r = r;
        p.ell = ell;
        if (!jumps.is_none()) p.jumps = jumps.cast<RankJumpVector>();
        p.type = type_arg(ktype);
        if (!d.is_none()) p.d = d.cast<long long>();
        return big(eval_formula(*pid, p));
      },
      py::arg("id"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      py::arg("ell") = 1, py::arg("jumps") = py::none(),
      py::arg("ktype") = py::none(), py::arg("d") = py::none());

  m.def(
      "verify",
      [](const std::string& id, long long n, long long k, long long r,
         int ell) {
        auto pid = parse_formula_id(id);
        if (!pid) throw std::invalid_argument("unknown formula id: " + id);
        py::list out;
        for (const CountReport& rep :
             verify_formula(*pid, VerifyCase{n, k, r, ell}))
          out.append(py_json(to_json(rep)));
        return out;
      },
      py::arg("id"), py::arg("n"), py::arg("k") = 1, py::arg("r") = 0,
      py::arg("ell") = 1,
      "Brute-force vs. closed-form reports, one dict per admissible filter "
      "value.");

  m.def(
      "armstrong_iso",
      [](long long n, long long k) {
        IsoReport rep = armstrong_iso(n, k);
        py::dict d;
        d["tilde"] = spec_dict(rep.tildeSpec);
        d["aug"] = spec_dict(rep.augSpec);
        d["size"] = rep.size;
        d["pairing"] = rep.pairing;
        d["bijective"] = rep.bijective;
        d["orderPreserved"] = rep.orderPreserved;
        d["typePreserved"] = rep.typePreserved;
        d["ok"] = rep.ok;
        return d;
      },
      py::arg("n"), py::arg("k"),
      "Certificate for the rotation-invariant/augmented order isomorphism.");

  // --- bijections ------------------------------------------------------------
  m.def(
      "psi",
      [](int n, const std::vector<std::vector<int>>& blocks) {
        BPair bp = psi(SignedPartition::make(n, blocks));
        py::dict d;
        d["sigma"] = py_json(to_json(bp.sigma));
        d["x"] = py_json(to_json(bp.x));
        return d;
      },
      py::arg("n"), py::arg("blocks"));

  m.def(
      "psi_inv",
      [](int n, const std::vector<std::vector<int>>& sigma,
         const py::object& x) {
        XPart xp = XPart::empty();
        if (!x.is_none()) {
          py::dict d = x.cast<py::dict>();
          const std::string kind = d["kind"].cast<std::string>();
          if (kind == "edge") {
            auto [i, j] = d["value"].cast<std::pair<int, int>>();
            xp = XPart::make_edge(i, j);
          } else if (kind == "block") {
            xp = XPart::make_block(d["value"].cast<int>());
          } else if (kind != "empty") {
            throw std::invalid_argument("x kind must be empty, edge, or block");
          }
        }
        return py_json(to_json(psi_inv(BPair{SetPartition::make(n, sigma), xp})));
      },
      py::arg("n"), py::arg("sigma"), py::arg("x") = py::none());

  m.def(
      "tau_prime",
      [](int n, std::vector<int> L, std::vector<std::vector<int>> Rs) {
        auto [B, chain] =
            tau_prime(ParenState::make(n, std::move(L), std::move(Rs)));
        py::dict d;
        d["B"] = B;
        py::list ch;
        for (const SetPartition& pi : chain) ch.append(py_json(to_json(pi)));
        d["chain"] = ch;
        return d;
      },
      py::arg("n"), py::arg("L"), py::arg("Rs"));

  m.def(
      "tau_prime_inv",
      [](int n, const std::vector<int>& B,
         const std::vector<std::vector<std::vector<int>>>& chain) {
        std::vector<SetPartition> ch;
        for (const auto& blocks : chain)
          ch.push_back(SetPartition::make(n, blocks));
        return py_json(to_json(tau_prime_inv(B, ch)));
      },
      py::arg("n"), py::arg("B"), py::arg("chain"));

  m.def(
      "tau_d_prime",
      [](int n, int k, std::vector<int> L, std::vector<std::vector<int>> Rs,
         const py::dict& f, int eps) {
        DParenState d = DParenState::make(
            n, k, ParenState::make(k * (n - 1), std::move(L), std::move(Rs)),
            f_arg(f));
        py::list out;
        for (const AnnulusPartition& pi : tau_D_prime(d, eps))
          out.append(py_json(to_json(pi)));
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("L"), py::arg("Rs"), py::arg("f"),
      py::arg("eps"));

  m.def(
      "tau_d_prime_inv",
      [](int n, int k, const std::vector<std::vector<std::vector<int>>>& chain) {
        std::vector<AnnulusPartition> ch;
        for (const auto& blocks : chain)
          ch.push_back(AnnulusPartition::make(n, k, SignedPartition::make(k * n, blocks)));
        auto [d, eps] = tau_D_prime_inv(ch);
        py::dict out;
        out["n"] = d.n;
        out["k"] = d.k;
        out["L"] = d.paren.L;
        out["Rs"] = d.paren.Rs;
        py::dict f;
        for (const auto& [pos, cnt] : d.f) f[py::int_(pos)] = cnt;
        out["f"] = f;
        out["eps"] = eps;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("chain"));
}
