#pragma once

#include <chrono>
#include <cstdint>
#include <iterator>
#include <string_view>
#include <vector>

#include "permpat/permutation.hpp"
#include "permpat/restriction.hpp"

namespace permpat {

inline constexpr int kDefaultMaxN = 10;

enum class CountKernel {
  naive,  // pruned depth-first search with cap-based early exit
  fast3,  // O(n^2) tallies for length-3 patterns, naive for other lengths
};

struct EnumerationOptions {
  int max_n = kDefaultMaxN;
  /// 1 = serial; 0 = std::thread::hardware_concurrency().
  unsigned threads = 1;
  CountKernel kernel = CountKernel::naive;
};

/// All n! permutations of [n] in lexicographic order, as an input range.
class SymmetricGroup {
 public:
  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Permutation& operator*() const { return current_; }
    const Permutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class SymmetricGroup;
    explicit iterator(int n) : current_(Permutation::identity(n)) {}
    Permutation current_;
    bool done_ = false;
  };

  /// Throws ResourceLimit when n > max_n, InvalidInput when n < 0.
  explicit SymmetricGroup(int n, int max_n = kDefaultMaxN);

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }
  std::uint64_t size() const;

 private:
  int n_;
};

inline SymmetricGroup iter_sn(int n, int max_n = kDefaultMaxN) { return SymmetricGroup(n, max_n); }

/// Membership in S_n(R;T). Avoid checks (cap 1) run before contain checks
/// (cap m+1); shorter patterns first within each group.
bool satisfies(const Permutation& pi, const RestrictionSpec& spec,
               CountKernel kernel = CountKernel::naive);

/// Sorted members of S_n(R;T).
std::vector<Permutation> members(int n, const RestrictionSpec& spec, const EnumerationOptions& opts = {});

/// s_n(R;T). With opts.threads != 1 the space is split by first letter into n
/// blocks; block tallies are summed, so the result equals the serial count.
std::uint64_t count(int n, const RestrictionSpec& spec, const EnumerationOptions& opts = {});

enum class Method { brute, formula, generator };
std::string_view name(Method m);
/// Throws InvalidInput for anything other than brute, formula, generator.
Method parse_method(std::string_view text);

struct SequenceRecord {
  RestrictionSpec spec;
  int n_min = 0;
  int n_max = 0;
  std::vector<std::uint64_t> values;  // values[i] is the count at n_min + i
  Method method = Method::brute;
  std::chrono::system_clock::time_point produced_at{};
};

/// Brute-force counts for n_min..n_max. Requires 0 <= n_min <= n_max <= opts.max_n.
SequenceRecord sequence(const RestrictionSpec& spec, int n_min, int n_max,
                        const EnumerationOptions& opts = {});

}  // namespace permpat
