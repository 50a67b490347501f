#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpat/rational.hpp"
#include "permpat/restriction.hpp"

namespace permpat {

enum class ClassId {
  A, B, C, D, E, F, G, H, I, J,
  SingleAvoid,
  SingleContain123,
  SingleContain132,
  PairAvoidPower,     // SS_2A: 2^(n-1)
  PairAvoidBinomial,  // SS_2B: C(n,2)+1
  PairAvoidZero,      // SS_2C: 0 for n >= 5
};

/// "A".."J", "SINGLE_AVOID", "SINGLE_CONTAIN_123", "SINGLE_CONTAIN_132", "SS_2A", "SS_2B", "SS_2C".
std::string_view name(ClassId id);
std::optional<ClassId> parse_class_id(std::string_view text);

/// One piecewise closed form and the union of symmetry orbits it covers.
struct FormulaEntry {
  ClassId id;
  std::vector<RestrictionSpec> representatives;
  std::vector<RestrictionSpec> members;  // sorted union of the representatives' orbits
  std::string display;
  int valid_from = 1;
  std::vector<std::pair<int, std::uint64_t>> exceptions;  // below valid_from
  std::function<Rational(std::int64_t)> closed_form;
};

/// The full ledger, built once. Orbits are pairwise disjoint.
const std::vector<FormulaEntry>& known_table();

/// Entry whose member set contains `spec`, or nullptr when no closed form is known.
const FormulaEntry* lookup(const RestrictionSpec& spec);
const FormulaEntry& entry(ClassId id);

/// Exceptions first, then the closed form for n >= valid_from; nullopt below the
/// stated range. The closed form is evaluated over the rationals and must come
/// out as a non-negative integer, otherwise InternalConsistency is thrown.
std::optional<std::uint64_t> eval(const FormulaEntry& entry, int n);

/// Pairs of classes with equal sequences from the given n on although they
/// lie in different symmetry orbits (one ordered pair, one multiset).
struct MixedEquivalence {
  ClassId ordered;
  ClassId multiset;
  int from_n;
};
std::span<const MixedEquivalence> mixed_equivalences();

}  // namespace permpat
