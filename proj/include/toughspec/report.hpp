#pragma once

#include <vector>

#include <json.hpp>

#include "toughspec/lemmas.hpp"
#include "toughspec/search.hpp"
#include "toughspec/toughness.hpp"
#include "toughspec/verify.hpp"

namespace toughspec {

using Json = nlohmann::json;

// JSON views of library results. Keys are emitted sorted; graphs are embedded
// as edge-list strings.
Json to_json(const CutWitness& w);
Json to_json(const ToughnessResult& r);
Json to_json(const TheoremId& t);  // {"theorem": ..., "params": {...}}
Json to_json(const Verdict& v);
Json to_json(const SearchReport& r);
Json to_json(const RemarkRow& row);
Json to_json(const std::vector<RemarkRow>& rows);
Json to_json(const BoundReport& b);
Json to_json(const ComparisonReport& c);
Json to_json(const RotationReport& r);
Json to_json(const BrouwerReport& b);

}  // namespace toughspec
