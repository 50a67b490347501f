#include "permpat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "permpat/checked.hpp"
#include "permpat/error.hpp"
#include "permpat/occurrence.hpp"

namespace permpat {

namespace {

void check_n(int n, int max_n) {
  if (n < 0) throw InvalidInput("n must be non-negative");
  if (n > max_n)
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the enumeration limit " +
                        std::to_string(max_n) + " (raise it with --max-n)");
}

// Pre-sorted check list for one spec: avoid-patterns then contain-patterns,
// each group ordered by length.
class CheckPlan {
 public:
  CheckPlan(const RestrictionSpec& spec, CountKernel kernel) : kernel_(kernel) {
    for (const auto& p : spec.avoid()) avoid_.push_back(&p);
    for (const auto& req : spec.contain()) contain_.push_back(&req);
    auto by_len = [](const auto* a, const auto* b) { return size_of(*a) < size_of(*b); };
    std::stable_sort(avoid_.begin(), avoid_.end(), by_len);
    std::stable_sort(contain_.begin(), contain_.end(), by_len);
    for (const auto* p : avoid_) uses_len3_ = uses_len3_ || p->size() == 3;
    for (const auto* r : contain_) uses_len3_ = uses_len3_ || r->pattern.size() == 3;
    uses_len3_ = uses_len3_ && kernel_ == CountKernel::fast3;
  }

  bool accepts(std::span<const int> word) const {
    detail::Len3Counts tallies;
    if (uses_len3_) tallies = detail::count_all_len3(word);
    for (const auto* p : avoid_) {
      if (uses_len3_ && p->size() == 3) {
        if (tallies.by_rank[detail::len3_rank(p->word())] != 0) return false;
      } else if (detail::count_upto(word, p->word(), 1) != 0) {
        return false;
      }
    }
    for (const auto* req : contain_) {
      const std::uint64_t m = req->multiplicity;
      if (uses_len3_ && req->pattern.size() == 3) {
        if (tallies.by_rank[detail::len3_rank(req->pattern.word())] != m) return false;
      } else if (detail::count_upto(word, req->pattern.word(), m + 1) != m) {
        return false;
      }
    }
    return true;
  }

 private:
  static int size_of(const Pattern& p) { return p.size(); }
  static int size_of(const ContainRequirement& r) { return r.pattern.size(); }

  CountKernel kernel_;
  std::vector<const Pattern*> avoid_;
  std::vector<const ContainRequirement*> contain_;
  bool uses_len3_ = false;
};

// Visit every permutation of [n] whose first letter is `first`, lexicographically.
template <class Visit>
void for_each_in_block(int n, int first, Visit&& visit) {
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  word.push_back(first);
  for (int v = 1; v <= n; ++v)
    if (v != first) word.push_back(v);
  do {
    visit(std::span<const int>(word));
  } while (std::next_permutation(word.begin() + 1, word.end()));
}

unsigned resolve_threads(unsigned requested, int blocks) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return std::min<unsigned>(t, static_cast<unsigned>(std::max(blocks, 1)));
}

// Run `job(block)` for blocks 1..n, serially or on a pool pulling from a shared counter.
void run_blocks(int n, unsigned threads, const std::function<void(int)>& job) {
  const unsigned workers = resolve_threads(threads, n);
  if (workers <= 1) {
    for (int b = 1; b <= n; ++b) job(b);
    return;
  }
  std::atomic<int> next{1};
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int b = next++; b <= n; b = next++) job(b);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

SymmetricGroup::SymmetricGroup(int n, int max_n) : n_(n) { check_n(n, max_n); }

std::uint64_t SymmetricGroup::size() const { return factorial(static_cast<unsigned>(n_)); }

SymmetricGroup::iterator& SymmetricGroup::iterator::operator++() {
  auto& word = detail::WordAccess::word(current_);
  done_ = !std::next_permutation(word.begin(), word.end());
  return *this;
}

bool satisfies(const Permutation& pi, const RestrictionSpec& spec, CountKernel kernel) {
  return CheckPlan(spec, kernel).accepts(pi.word());
}

std::vector<Permutation> members(int n, const RestrictionSpec& spec, const EnumerationOptions& opts) {
  check_n(n, opts.max_n);
  const CheckPlan plan(spec, opts.kernel);
  if (n == 0) {
    if (plan.accepts({})) return {Permutation()};
    return {};
  }
  std::vector<std::vector<Permutation>> blocks(static_cast<std::size_t>(n));
  run_blocks(n, opts.threads, [&](int first) {
    auto& out = blocks[first - 1];
    for_each_in_block(n, first, [&](std::span<const int> word) {
      if (plan.accepts(word))
        out.push_back(detail::WordAccess::adopt(std::vector<int>(word.begin(), word.end())));
    });
  });
  std::vector<Permutation> all;
  for (auto& b : blocks) std::move(b.begin(), b.end(), std::back_inserter(all));
  return all;
}

std::uint64_t count(int n, const RestrictionSpec& spec, const EnumerationOptions& opts) {
  check_n(n, opts.max_n);
  const CheckPlan plan(spec, opts.kernel);
  if (n == 0) return plan.accepts({}) ? 1 : 0;
  std::vector<std::uint64_t> tallies(static_cast<std::size_t>(n), 0);
  run_blocks(n, opts.threads, [&](int first) {
    std::uint64_t local = 0;
    for_each_in_block(n, first, [&](std::span<const int> word) {
      if (plan.accepts(word)) ++local;
    });
    tallies[first - 1] = local;
  });
  std::uint64_t total = 0;
  for (auto t : tallies) total = checked_add(total, t);
  return total;
}

std::string_view name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::formula: return "formula";
    case Method::generator: return "generator";
  }
  return "?";
}

Method parse_method(std::string_view text) {
  for (auto m : {Method::brute, Method::formula, Method::generator})
    if (name(m) == text) return m;
  throw InvalidInput("unknown method '" + std::string(text) + "' (expected brute, formula, generator)");
}

SequenceRecord sequence(const RestrictionSpec& spec, int n_min, int n_max, const EnumerationOptions& opts) {
  if (n_min < 0 || n_min > n_max)
    throw InvalidInput("sequence range must satisfy 0 <= from <= to");
  check_n(n_max, opts.max_n);
  SequenceRecord rec{spec, n_min, n_max, {}, Method::brute, std::chrono::system_clock::now()};
  rec.values.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) rec.values.push_back(count(n, spec, opts));
  return rec;
}

}  // namespace permpat
