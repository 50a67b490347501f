#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpat {

namespace detail {
struct WordAccess;
}

/// A permutation of [n] written as a word: each of 1..n appears exactly once.
///
/// Values are 1-based. The default-constructed value is the empty permutation
/// (n = 0), which only exists as the seed for the recursive constructions;
/// every other constructor rejects empty input.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// 0-based position, 1-based value.
  int operator[](std::size_t pos) const { return word_[pos]; }
  std::span<const int> word() const { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend struct detail::WordAccess;
  std::vector<int> word_;
};

/// A pattern of length k >= 1; matched inside a permutation by relative order.
class Pattern {
 public:
  explicit Pattern(std::vector<int> word);
  Pattern(std::initializer_list<int> word);
  explicit Pattern(const Permutation& perm);

  int size() const { return perm_.size(); }
  int operator[](std::size_t pos) const { return perm_[pos]; }
  std::span<const int> word() const { return perm_.word(); }
  const Permutation& as_permutation() const { return perm_; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  Permutation perm_;
};

/// Replace each entry by its rank among the entries: w_j = |{m : in_m <= in_j}|.
/// Throws InvalidInput on empty input or repeated entries.
Pattern standardize(std::span<const int> word);

/// Whitespace/comma separated decimal tokens ("3 1 4 2", "3,1,4,2"), or a
/// single compact digit string ("3142") when every value is at most 9.
std::vector<int> parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);
Pattern parse_pattern(std::string_view text);

/// Token form, e.g. "3 1 4 2". This is the emission format for permutations.
std::string to_string(const Permutation& perm);
std::string to_string(const Pattern& pattern);

/// Compact digits ("312") when k <= 9, token form otherwise. Used inside
/// restriction specs where a pattern is one list element.
std::string pattern_text(const Pattern& pattern);

std::ostream& operator<<(std::ostream& os, const Permutation& perm);
std::ostream& operator<<(std::ostream& os, const Pattern& pattern);

/// All k! patterns of length k in lexicographic order.
std::vector<Pattern> all_patterns(int k);

namespace detail {
// In-place access for the enumeration cursor; bypasses validation.
struct WordAccess {
  static std::vector<int>& word(Permutation& p) { return p.word_; }
  static Permutation adopt(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
  }
};
}  // namespace detail

}  // namespace permpat
