#include "ncpart/json_io.hpp"

#include <sstream>

namespace ncpart {

using nlohmann::json;

json to_json(const SetPartition& p) {
  return json{{"n", p.n}, {"blocks", p.blocks}};
}

json to_json(const SignedPartition& p) {
  return json{{"n", p.n}, {"blocks", p.all_blocks()}};
}

json to_json(const AnnulusPartition& p) {
  json j = to_json(p.part);
  j["family"] = "D";
  j["k"] = p.k;
  j["innerStart"] = p.inner_start();
  return j;
}

json to_json(const TypeVector& tv) {
  return json{{"b", tv.b}, {"counts", tv.counts}};
}

json to_json(const XPart& x) {
  switch (x.kind) {
    case XPart::Kind::Empty:
      return json{{"kind", "empty"}};
    case XPart::Kind::EdgeX:
      return json{{"kind", "edge"}, {"value", {x.edge.i, x.edge.j}}};
    case XPart::Kind::BlockX:
      return json{{"kind", "block"}, {"value", x.blockMin}};
  }
  return json{};
}

json to_json(const BPair& bp) {
  return json{{"sigma", to_json(bp.sigma)}, {"x", to_json(bp.x)}};
}

json to_json(const ParenState& p) {
  return json{{"n", p.n}, {"L", p.L}, {"Rs", p.Rs}};
}

json to_json(const DParenState& p) {
  json f = json::object();
  for (const auto& [pos, cnt] : p.f) f[std::to_string(pos)] = cnt;
  return json{{"n", p.n}, {"k", p.k}, {"L", p.paren.L}, {"Rs", p.paren.Rs}, {"f", f}};
}

json to_json(const CountQuery& q) {
  json j{{"family", family_name(q.spec.family)},
         {"n", q.spec.n},
         {"k", q.spec.k},
         {"r", q.spec.r},
         {"ell", q.ell}};
  j["jumps"] = q.jumps ? json(*q.jumps) : json(nullptr);
  j["ktype"] = q.ktype1 ? to_json(*q.ktype1) : json(nullptr);
  j["index"] = q.index ? json(*q.index) : json(nullptr);
  j["annularAny"] = q.annularAny ? json(*q.annularAny) : json(nullptr);
  return j;
}

json to_json(const CountReport& rep) {
  json j;
  j["query"] = to_json(rep.query);
  j["brute"] = to_string(rep.brute);
  j["formula"] = rep.formula ? json(to_string(*rep.formula)) : json(nullptr);
  j["id"] = rep.formulaId ? json(formula_id_name(*rep.formulaId)) : json(nullptr);
  j["match"] = rep.match;
  return j;
}

namespace {

template <typename T>
std::string joined(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ';';
    os << v[i];
  }
  return os.str();
}

}  // namespace

std::string csv_header() {
  return "id,family,n,k,r,ell,jumps,ktype_b,ktype_counts,index,annular_any,brute,formula,match";
}

std::string csv_row(const CountReport& rep) {
  const CountQuery& q = rep.query;
  std::ostringstream os;
  os << (rep.formulaId ? formula_id_name(*rep.formulaId) : "") << ','
     << family_name(q.spec.family) << ',' << q.spec.n << ',' << q.spec.k << ',' << q.spec.r
     << ',' << q.ell << ',';
  if (q.jumps) os << joined(*q.jumps);
  os << ',';
  if (q.ktype1) os << q.ktype1->b;
  os << ',';
  if (q.ktype1) os << joined(q.ktype1->counts);
  os << ',';
  if (q.index) os << *q.index;
  os << ',';
  if (q.annularAny) os << (*q.annularAny ? "true" : "false");
  os << ',' << to_string(rep.brute) << ',';
  if (rep.formula) os << to_string(*rep.formula);
  os << ',' << (rep.match ? "true" : "false");
  return os.str();
}

}  // namespace ncpart
