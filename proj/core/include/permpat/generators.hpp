#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "permpat/enumerate.hpp"
#include "permpat/permutation.hpp"
#include "permpat/restriction.hpp"

namespace permpat {

/// Families with an explicit recursive construction.
enum class Family {
  F_123_312,   // (123;312)
  F_312_123,   // (312;123)
  F_E123_312,  // (;123,312)
  F_132_312,   // (132;312)
  F_E132_312,  // (;132,312)
};

inline constexpr std::array<Family, 5> kAllFamilies = {
    Family::F_123_312, Family::F_312_123, Family::F_E123_312, Family::F_132_312, Family::F_E132_312};

std::string_view name(Family f);
/// Accepts the enumerator name ("F_132_312") or the spec text with or without
/// parentheses ("132;312", "(;132,312)").
Family parse_family(std::string_view text);
RestrictionSpec family_spec(Family f);
/// Smallest n the construction starts from: 3, 3, 5, 4, 4.
int family_base_size(Family f);

/// (pi_1+1)(pi_2+1)...(pi_{m-1}+1) 1 -- shift every letter up and append 1.
Permutation shift_append_one(const Permutation& pi);
/// pi_1 ... pi_{m-1} m -- append a new maximum.
Permutation append_maximum(const Permutation& pi);

/// The two words each 2n-5 family adds at size n on top of the shifted copies
/// of size n-1. Empty for the two families built by the maps alone.
std::vector<Permutation> extra_elements(Family f, int n);

/// Sorted S_n(spec(f)) built up from the base one size at a time.
/// Throws InvalidInput when n < family_base_size(f).
std::vector<Permutation> generate(Family f, int n, const EnumerationOptions& opts = {});

}  // namespace permpat
