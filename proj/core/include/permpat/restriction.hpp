#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permpat/permutation.hpp"

namespace permpat {

struct ContainRequirement {
  Pattern pattern;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const ContainRequirement&, const ContainRequirement&) = default;
  friend auto operator<=>(const ContainRequirement&, const ContainRequirement&) = default;
};

/// The key (R;T): permutations must avoid every pattern in `avoid` and contain
/// each pattern of the multiset `contain` exactly `multiplicity` times.
///
/// Always held in canonical form: avoid sorted and deduplicated, repeated
/// contain patterns folded into one entry, contain sorted by (pattern,
/// multiplicity). A pattern may not be both avoided and contained.
class RestrictionSpec {
 public:
  RestrictionSpec() = default;
  RestrictionSpec(std::vector<Pattern> avoid, std::vector<ContainRequirement> contain);

  /// Shorthand for the ordered pair (alpha;beta): avoid alpha, contain beta once.
  static RestrictionSpec avoid_contain(const Pattern& avoided, const Pattern& contained);
  /// (emptyset;{alpha,beta}) with both multiplicities 1 (or one entry of 2 if equal).
  static RestrictionSpec contain_pair(const Pattern& a, const Pattern& b);
  static RestrictionSpec avoiding(std::vector<Pattern> avoid);

  const std::vector<Pattern>& avoid() const { return avoid_; }
  const std::vector<ContainRequirement>& contain() const { return contain_; }

  /// "(123;312)", "(;132,213)", "(;132^2)", "(123,321;)".
  std::string text() const;

  friend bool operator==(const RestrictionSpec&, const RestrictionSpec&) = default;
  friend auto operator<=>(const RestrictionSpec&, const RestrictionSpec&) = default;

 private:
  std::vector<Pattern> avoid_;
  std::vector<ContainRequirement> contain_;
};

/// Inverse of RestrictionSpec::text(); parentheses optional.
RestrictionSpec parse_spec(std::string_view text);

/// "132" or "132^2" -> requirement.
ContainRequirement parse_contain_item(std::string_view text);

/// The 30 ordered pairs (alpha;beta), alpha != beta in S_3, in lexicographic order.
std::vector<RestrictionSpec> ordered_pair_specs();
/// The 15 multisets (emptyset;{alpha,beta}), alpha != beta in S_3.
std::vector<RestrictionSpec> multiset_pair_specs();

}  // namespace permpat
