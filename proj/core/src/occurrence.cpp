#include "permpat/occurrence.hpp"

#include <array>
#include <limits>
#include <vector>

#include "permpat/checked.hpp"
#include "permpat/error.hpp"

namespace permpat {

namespace detail {

namespace {

// For pattern position d, the earlier pattern positions holding the nearest
// smaller and nearest larger letter (-1 when there is none). A candidate value
// for position d is consistent iff it lies strictly between the values chosen
// at those two positions.
struct Brackets {
  std::vector<int> below;
  std::vector<int> above;

  explicit Brackets(std::span<const int> pattern)
      : below(pattern.size(), -1), above(pattern.size(), -1) {
    for (std::size_t d = 0; d < pattern.size(); ++d) {
      for (std::size_t m = 0; m < d; ++m) {
        if (pattern[m] < pattern[d] && (below[d] < 0 || pattern[m] > pattern[below[d]]))
          below[d] = static_cast<int>(m);
        if (pattern[m] > pattern[d] && (above[d] < 0 || pattern[m] < pattern[above[d]]))
          above[d] = static_cast<int>(m);
      }
    }
  }
};

class Matcher {
 public:
  Matcher(std::span<const int> word, std::span<const int> pattern, std::uint64_t limit)
      : word_(word), k_(static_cast<int>(pattern.size())), brackets_(pattern), limit_(limit),
        chosen_(pattern.size()) {}

  std::uint64_t run() {
    if (k_ == 0 || k_ > static_cast<int>(word_.size()) || limit_ == 0) return 0;
    search(0, 0);
    return found_;
  }

 private:
  void search(int depth, int start) {
    const int n = static_cast<int>(word_.size());
    const int last = n - (k_ - depth);
    const int lo_at = brackets_.below[depth];
    const int hi_at = brackets_.above[depth];
    const int lo = lo_at < 0 ? 0 : chosen_[lo_at];
    const int hi = hi_at < 0 ? std::numeric_limits<int>::max() : chosen_[hi_at];
    for (int pos = start; pos <= last; ++pos) {
      const int v = word_[pos];
      if (v <= lo || v >= hi) continue;
      if (depth + 1 == k_) {
        if (++found_ >= limit_) return;
        continue;
      }
      chosen_[depth] = v;
      search(depth + 1, pos + 1);
      if (found_ >= limit_) return;
    }
  }

  std::span<const int> word_;
  int k_;
  Brackets brackets_;
  std::uint64_t limit_;
  std::vector<int> chosen_;
  std::uint64_t found_ = 0;
};

}  // namespace

std::uint64_t count_upto(std::span<const int> word, std::span<const int> pattern,
                         std::uint64_t limit) {
  return Matcher(word, pattern, limit).run();
}

int len3_rank(std::span<const int> p) {
  if (p.size() != 3) throw InvalidInput("length-3 kernel called with a pattern of length " +
                                        std::to_string(p.size()));
  const int code = p[0] * 100 + p[1] * 10 + p[2];
  switch (code) {
    case 123: return 0;
    case 132: return 1;
    case 213: return 2;
    case 231: return 3;
    case 312: return 4;
    case 321: return 5;
    default: throw InvalidInput("not a pattern of length 3");
  }
}

Len3Counts count_all_len3(std::span<const int> word) {
  const std::size_t n = word.size();
  std::uint64_t s123 = 0, s321 = 0;
  std::uint64_t first_pairs_above = 0;  // #123 + #132
  std::uint64_t last_pairs_below = 0;   // #123 + #213
  std::uint64_t peaks = 0;              // #132 + #231
  std::uint64_t valleys = 0;            // #213 + #312
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t left_less = 0, left_greater = 0, right_less = 0, right_greater = 0;
    for (std::size_t i = 0; i < j; ++i) (word[i] < word[j] ? left_less : left_greater)++;
    for (std::size_t i = j + 1; i < n; ++i) (word[i] < word[j] ? right_less : right_greater)++;
    s123 = checked_add(s123, checked_mul(left_less, right_greater));
    s321 = checked_add(s321, checked_mul(left_greater, right_less));
    peaks = checked_add(peaks, checked_mul(left_less, right_less));
    valleys = checked_add(valleys, checked_mul(left_greater, right_greater));
    first_pairs_above = checked_add(first_pairs_above, binomial(right_greater, 2));
    last_pairs_below = checked_add(last_pairs_below, binomial(left_less, 2));
  }
  Len3Counts out;
  const std::uint64_t s132 = first_pairs_above - s123;
  const std::uint64_t s213 = last_pairs_below - s123;
  out.by_rank[0] = s123;
  out.by_rank[1] = s132;
  out.by_rank[2] = s213;
  out.by_rank[3] = peaks - s132;
  out.by_rank[4] = valleys - s213;
  out.by_rank[5] = s321;
  return out;
}

}  // namespace detail

OccurrenceCount count_occurrences(const Permutation& pi, const Pattern& alpha,
                                  std::optional<std::uint64_t> cap) {
  if (!cap) {
    return {detail::count_upto(pi.word(), alpha.word(),
                               std::numeric_limits<std::uint64_t>::max()),
            false};
  }
  if (*cap == 0) throw InvalidInput("occurrence cap must be positive");
  const std::uint64_t limit =
      *cap == std::numeric_limits<std::uint64_t>::max() ? *cap : *cap + 1;
  const std::uint64_t seen = detail::count_upto(pi.word(), alpha.word(), limit);
  if (seen > *cap) return {*cap, true};
  return {seen, false};
}

bool avoids(const Permutation& pi, const Pattern& alpha) {
  return detail::count_upto(pi.word(), alpha.word(), 1) == 0;
}

bool contains_exactly(const Permutation& pi, const Pattern& alpha, std::uint64_t r) {
  if (r == 0) throw InvalidInput("contains_exactly: multiplicity must be >= 1");
  return detail::count_upto(pi.word(), alpha.word(), r + 1) == r;
}

OccurrenceCount count_len3_fast(const Permutation& pi, const Pattern& alpha) {
  const int rank = detail::len3_rank(alpha.word());
  return {detail::count_all_len3(pi.word()).by_rank[rank], false};
}

}  // namespace permpat
