#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "permpat/permutation.hpp"

namespace permpat {

/// Occurrence tally. When `capped` is false, `value` is exact; otherwise the
/// permutation has strictly more than `value` occurrences.
struct OccurrenceCount {
  std::uint64_t value = 0;
  bool capped = false;

  friend bool operator==(const OccurrenceCount&, const OccurrenceCount&) = default;
};

/// Number of index sets i_1 < ... < i_k whose values standardize to `alpha`.
///
/// Depth-first over positions, extending a partial match only when the new
/// value lies strictly between the two already-chosen values that bracket it
/// in the pattern, and abandoning a branch once too few positions remain.
/// With a cap c the result is min(exact, c) and `capped` is (exact > c).
/// Throws InvalidInput for cap == 0.
OccurrenceCount count_occurrences(const Permutation& pi, const Pattern& alpha,
                                  std::optional<std::uint64_t> cap = std::nullopt);

bool avoids(const Permutation& pi, const Pattern& alpha);

/// True iff `alpha` occurs exactly `r` times; never looks past r+1 occurrences.
bool contains_exactly(const Permutation& pi, const Pattern& alpha, std::uint64_t r);

/// Exact count for length-3 patterns in O(n^2) from per-position tallies of
/// smaller/larger entries on each side. Throws InvalidInput if alpha.size() != 3.
OccurrenceCount count_len3_fast(const Permutation& pi, const Pattern& alpha);

namespace detail {

// Span-level kernels used by the enumerator on a reused buffer.
// Stops once `limit` occurrences are found and returns min(exact, limit).
std::uint64_t count_upto(std::span<const int> word, std::span<const int> pattern,
                         std::uint64_t limit);

// All six length-3 counts at once, indexed by the lexicographic rank of the
// pattern in S_3: 123, 132, 213, 231, 312, 321.
struct Len3Counts {
  std::uint64_t by_rank[6] = {};
};
Len3Counts count_all_len3(std::span<const int> word);
int len3_rank(std::span<const int> pattern);

}  // namespace detail

}  // namespace permpat
