#include "permpat/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permpat/error.hpp"
#include "permpat/symmetry.hpp"

namespace permpat {

ClassReport classify(std::span<const RestrictionSpec> specs, int n_min, int n_max,
                     const EnumerationOptions& opts, const CountSource& source) {
  if (specs.empty()) throw InvalidInput("classify needs at least one spec");
  if (n_min < 1 || n_min > n_max) throw InvalidInput("classify window must satisfy 1 <= from <= to");
  if (n_max > opts.max_n)
    throw ResourceLimit("window end " + std::to_string(n_max) + " exceeds the enumeration limit " +
                        std::to_string(opts.max_n));

  std::vector<RestrictionSpec> unique(specs.begin(), specs.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  auto counter = source ? source : [&opts](const RestrictionSpec& s, int n) { return count(n, s, opts); };
  std::map<std::vector<std::uint64_t>, std::vector<RestrictionSpec>> by_sequence;
  for (const auto& s : unique) {
    std::vector<std::uint64_t> seq;
    for (int n = n_min; n <= n_max; ++n) seq.push_back(counter(s, n));
    by_sequence[std::move(seq)].push_back(s);
  }

  ClassReport report;
  report.n_min = n_min;
  report.n_max = n_max;
  for (auto& [seq, members] : by_sequence)
    report.classes.push_back({members.front(), std::move(members), seq});
  std::sort(report.classes.begin(), report.classes.end(),
            [](const SpecClass& a, const SpecClass& b) { return a.representative < b.representative; });
  return report;
}

std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::matches: return "matches";
    case Verdict::mixed_restriction_fusion: return "mixed-restriction fusion";
    case Verdict::indistinguishable: return "indistinguishable over window";
    case Verdict::no_formula: return "no formula";
    case Verdict::discrepancy: return "discrepancy";
  }
  return "?";
}

namespace {

bool is_known_fusion(const std::vector<std::optional<ClassId>>& ids, int n_min) {
  if (ids.size() != 2 || !ids[0] || !ids[1]) return false;
  for (const auto& eq : mixed_equivalences()) {
    const bool pair = (*ids[0] == eq.ordered && *ids[1] == eq.multiset) ||
                      (*ids[0] == eq.multiset && *ids[1] == eq.ordered);
    if (pair && n_min >= eq.from_n) return true;
  }
  return false;
}

std::string id_list(const std::vector<std::optional<ClassId>>& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += '+';
    out += id ? std::string(name(*id)) : "-";
  }
  return out;
}

}  // namespace

Reconciliation reconcile(const ClassReport& report) {
  Reconciliation out;
  std::map<ClassId, std::vector<std::size_t>> where;

  for (std::size_t ci = 0; ci < report.classes.size(); ++ci) {
    const auto& cls = report.classes[ci];
    ClassReconciliation rec;
    std::set<RestrictionSpec> orbit_reps;
    std::set<std::optional<ClassId>> ids;
    for (const auto& m : cls.members) {
      orbit_reps.insert(orbit_representative(m));
      const FormulaEntry* e = lookup(m);
      ids.insert(e ? std::optional<ClassId>(e->id) : std::nullopt);
    }
    rec.ledger_ids.assign(ids.begin(), ids.end());
    rec.orbit_count = orbit_reps.size();
    rec.fused_beyond_symmetry = orbit_reps.size() > 1;
    for (const auto& id : rec.ledger_ids)
      if (id) where[*id].push_back(ci);

    const bool all_zero = std::all_of(cls.witness.begin(), cls.witness.end(), [](auto v) { return v == 0; });
    const bool any_missing = ids.count(std::nullopt) > 0;
    if (rec.ledger_ids.size() == 1) {
      rec.verdict = any_missing ? Verdict::no_formula : Verdict::matches;
    } else if (all_zero) {
      rec.verdict = Verdict::indistinguishable;
      rec.note = "classes " + id_list(rec.ledger_ids) + " are all zero on the window";
    } else if (is_known_fusion(rec.ledger_ids, report.n_min)) {
      rec.verdict = Verdict::mixed_restriction_fusion;
      rec.note = "ordered and multiset restrictions agree: " + id_list(rec.ledger_ids);
    } else {
      rec.verdict = Verdict::discrepancy;
      rec.note = "empirical class " + cls.representative.text() + " merges ledger classes " +
                 id_list(rec.ledger_ids);
      out.discrepancies.push_back(rec.note);
    }
    out.classes.push_back(std::move(rec));
  }

  for (const auto& [id, places] : where) {
    if (places.size() <= 1) continue;
    std::string msg = "ledger class " + std::string(name(id)) + " is split across empirical classes";
    for (auto ci : places) msg += " " + report.classes[ci].representative.text();
    out.discrepancies.push_back(msg);
    for (auto ci : places) {
      auto& rec = out.classes[ci];
      if (rec.verdict != Verdict::discrepancy) {
        rec.verdict = Verdict::discrepancy;
        rec.note = msg;
      }
    }
  }
  return out;
}

}  // namespace permpat
