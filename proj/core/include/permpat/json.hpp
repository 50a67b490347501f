#pragma once

#include <nlohmann/json.hpp>

#include "permpat/classify.hpp"
#include "permpat/enumerate.hpp"
#include "permpat/formulas.hpp"
#include "permpat/restriction.hpp"

namespace permpat {

/// {"avoid":["123"],"contain":[{"pattern":"132","count":1}]}
nlohmann::json to_json(const RestrictionSpec& spec);
RestrictionSpec spec_from_json(const nlohmann::json& j);

/// {"spec":{...},"range":[a,b],"values":[...],"method":"brute"}
nlohmann::json to_json(const SequenceRecord& rec);

/// class id, member specs, display formula, validity, exceptions
nlohmann::json to_json(const FormulaEntry& entry);
nlohmann::json ledger_json();

nlohmann::json to_json(const ClassReport& report);
nlohmann::json to_json(const ClassReport& report, const Reconciliation& rec);

}  // namespace permpat
