#include "permpat/json.hpp"

#include "permpat/error.hpp"

namespace permpat {

using nlohmann::json;

json to_json(const RestrictionSpec& spec) {
  json avoid = json::array();
  for (const auto& p : spec.avoid()) avoid.push_back(pattern_text(p));
  json contain = json::array();
  for (const auto& req : spec.contain())
    contain.push_back({{"pattern", pattern_text(req.pattern)}, {"count", req.multiplicity}});
  return {{"avoid", avoid}, {"contain", contain}};
}

RestrictionSpec spec_from_json(const json& j) {
  try {
    std::vector<Pattern> avoid;
    for (const auto& p : j.at("avoid")) avoid.push_back(parse_pattern(p.get<std::string>()));
    std::vector<ContainRequirement> contain;
    for (const auto& c : j.at("contain"))
      contain.push_back({parse_pattern(c.at("pattern").get<std::string>()), c.at("count").get<std::uint32_t>()});
    return RestrictionSpec(std::move(avoid), std::move(contain));
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed spec JSON: ") + e.what());
  }
}

json to_json(const SequenceRecord& rec) {
  return {{"spec", to_json(rec.spec)},
          {"range", {rec.n_min, rec.n_max}},
          {"values", rec.values},
          {"method", std::string(name(rec.method))}};
}

json to_json(const FormulaEntry& e) {
  json members = json::array();
  for (const auto& m : e.members) members.push_back(m.text());
  json exceptions = json::array();
  for (const auto& [n, v] : e.exceptions) exceptions.push_back({{"n", n}, {"value", v}});
  return {{"class", std::string(name(e.id))},
          {"members", members},
          {"formula", e.display},
          {"valid_from", e.valid_from},
          {"exceptions", exceptions}};
}

json ledger_json() {
  json out = json::array();
  for (const auto& e : known_table()) out.push_back(to_json(e));
  return out;
}

json to_json(const ClassReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json members = json::array();
    for (const auto& m : c.members) members.push_back(m.text());
    classes.push_back({{"representative", c.representative.text()}, {"members", members}, {"witness", c.witness}});
  }
  return {{"window", {report.n_min, report.n_max}}, {"method", report.method_note}, {"classes", classes}};
}

json to_json(const ClassReport& report, const Reconciliation& rec) {
  json out = to_json(report);
  for (std::size_t i = 0; i < rec.classes.size() && i < report.classes.size(); ++i) {
    const auto& r = rec.classes[i];
    json ids = json::array();
    for (const auto& id : r.ledger_ids) ids.push_back(id ? json(std::string(name(*id))) : json(nullptr));
    auto& cls = out["classes"][i];
    cls["ledger"] = ids;
    cls["orbits"] = r.orbit_count;
    cls["fused_beyond_symmetry"] = r.fused_beyond_symmetry;
    cls["verdict"] = std::string(name(r.verdict));
    if (!r.note.empty()) cls["note"] = r.note;
  }
  out["discrepancies"] = rec.discrepancies;
  return out;
}

}  // namespace permpat
