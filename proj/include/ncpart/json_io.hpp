#pragma once

#include <string>

#include "json.hpp"
#include "ncpart/annulus.hpp"
#include "ncpart/bpair.hpp"
#include "ncpart/counting.hpp"
#include "ncpart/paren.hpp"
#include "ncpart/verify.hpp"

namespace ncpart {

nlohmann::json to_json(const SetPartition& p);
nlohmann::json to_json(const SignedPartition& p);
nlohmann::json to_json(const AnnulusPartition& p);
nlohmann::json to_json(const TypeVector& tv);
nlohmann::json to_json(const XPart& x);
nlohmann::json to_json(const BPair& bp);
nlohmann::json to_json(const ParenState& p);
nlohmann::json to_json(const DParenState& p);
nlohmann::json to_json(const CountQuery& q);
nlohmann::json to_json(const CountReport& rep);

// CSV flattening of CountReports: one row per parameter tuple.
std::string csv_header();
std::string csv_row(const CountReport& rep);

}  // namespace ncpart
