#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permpat/enumerate.hpp"
#include "permpat/formulas.hpp"
#include "permpat/restriction.hpp"

namespace permpat {

inline constexpr int kDefaultWindowMin = 3;
inline constexpr int kDefaultWindowMax = 9;

struct SpecClass {
  RestrictionSpec representative;        // lexicographically least member
  std::vector<RestrictionSpec> members;  // sorted
  std::vector<std::uint64_t> witness;    // shared count sequence over the window
};

/// Specs grouped by equality of their count sequences over [n_min, n_max].
/// Equality over a finite window is evidence, not proof, of equivalence.
struct ClassReport {
  int n_min = kDefaultWindowMin;
  int n_max = kDefaultWindowMax;
  std::vector<SpecClass> classes;  // ordered by representative
  std::string method_note = "empirical over window";
};

/// Source of s_n(spec); defaults to brute-force enumeration. The CLI passes a
/// cache-backed source. Formula values must never be fed in here.
using CountSource = std::function<std::uint64_t(const RestrictionSpec&, int n)>;

ClassReport classify(std::span<const RestrictionSpec> specs, int n_min, int n_max,
                     const EnumerationOptions& opts = {}, const CountSource& source = {});

enum class Verdict {
  matches,                   // exactly one ledger class, not split elsewhere
  mixed_restriction_fusion,  // a known ordered/multiset equivalence
  indistinguishable,         // several classes, all zero over the window
  no_formula,                // members without any ledger entry
  discrepancy,
};
std::string_view name(Verdict v);

struct ClassReconciliation {
  std::vector<std::optional<ClassId>> ledger_ids;  // distinct, nullopt = no ledger entry
  std::size_t orbit_count = 0;
  bool fused_beyond_symmetry = false;  // more than one symmetry orbit in the class
  Verdict verdict = Verdict::matches;
  std::string note;
};

struct Reconciliation {
  std::vector<ClassReconciliation> classes;  // parallel to report.classes
  std::vector<std::string> discrepancies;
  bool consistent() const { return discrepancies.empty(); }
};

/// Compare an empirical partition against the ledger classes.
Reconciliation reconcile(const ClassReport& report);

}  // namespace permpat
