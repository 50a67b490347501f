#include "permpat/generators.hpp"

#include <algorithm>

#include "permpat/error.hpp"

namespace permpat {

namespace {

// hi, hi-1, ..., lo (nothing when hi < lo)
void descending(std::vector<int>& out, int hi, int lo) {
  for (int v = hi; v >= lo; --v) out.push_back(v);
}

std::vector<Permutation> base_set(Family f, const EnumerationOptions& opts) {
  switch (f) {
    case Family::F_123_312: return {Permutation{3, 1, 2}};
    case Family::F_312_123: return {Permutation{1, 2, 3}};
    case Family::F_132_312: return {Permutation{3, 1, 2, 4}, Permutation{4, 2, 3, 1}};
    case Family::F_E132_312: return {Permutation{2, 4, 1, 3}, Permutation{3, 1, 4, 2}};
    case Family::F_E123_312: {
      // The recursion only holds from n = 6; the size-5 seed comes from the oracle.
      EnumerationOptions seed = opts;
      seed.max_n = std::max(seed.max_n, 5);
      return members(5, family_spec(f), seed);
    }
  }
  throw InvalidInput("unknown family");
}

bool uses_extras(Family f) { return f != Family::F_132_312 && f != Family::F_E132_312; }

}  // namespace

std::string_view name(Family f) {
  switch (f) {
    case Family::F_123_312: return "F_123_312";
    case Family::F_312_123: return "F_312_123";
    case Family::F_E123_312: return "F_E123_312";
    case Family::F_132_312: return "F_132_312";
    case Family::F_E132_312: return "F_E132_312";
  }
  return "?";
}

RestrictionSpec family_spec(Family f) {
  switch (f) {
    case Family::F_123_312: return parse_spec("(123;312)");
    case Family::F_312_123: return parse_spec("(312;123)");
    case Family::F_E123_312: return parse_spec("(;123,312)");
    case Family::F_132_312: return parse_spec("(132;312)");
    case Family::F_E132_312: return parse_spec("(;132,312)");
  }
  throw InvalidInput("unknown family");
}

Family parse_family(std::string_view text) {
  for (auto f : kAllFamilies)
    if (name(f) == text) return f;
  RestrictionSpec wanted;
  try {
    wanted = parse_spec(text);
  } catch (const InvalidInput&) {
    throw InvalidInput("unknown family '" + std::string(text) + "'");
  }
  for (auto f : kAllFamilies)
    if (family_spec(f) == wanted) return f;
  throw InvalidInput("no generating rule for " + wanted.text() +
                     " (families: 123;312, 312;123, ;123,312, 132;312, ;132,312)");
}

int family_base_size(Family f) {
  switch (f) {
    case Family::F_123_312:
    case Family::F_312_123: return 3;
    case Family::F_E123_312: return 5;
    case Family::F_132_312:
    case Family::F_E132_312: return 4;
  }
  return 0;
}

Permutation shift_append_one(const Permutation& pi) {
  std::vector<int> out;
  out.reserve(pi.word().size() + 1);
  for (int v : pi.word()) out.push_back(v + 1);
  out.push_back(1);
  return Permutation(std::move(out));
}

Permutation append_maximum(const Permutation& pi) {
  std::vector<int> out(pi.word().begin(), pi.word().end());
  out.push_back(pi.size() + 1);
  return Permutation(std::move(out));
}

std::vector<Permutation> extra_elements(Family f, int n) {
  if (!uses_extras(f)) return {};
  if (n < 4) throw InvalidInput("extra elements are defined for n >= 4");
  std::vector<int> a, b;
  switch (f) {
    case Family::F_123_312:
      // 3 1 n (n-1) ... 4 2  and  (n-2) (n-3) ... 2 n 1 (n-1)
      a = {3, 1};
      descending(a, n, 4);
      a.push_back(2);
      descending(b, n - 2, 2);
      b.insert(b.end(), {n, 1, n - 1});
      break;
    case Family::F_312_123:
      // 1 (n-1) n (n-2) ... 2  and  (n-2) (n-1) (n-3) ... 1 n
      a = {1, n - 1, n};
      descending(a, n - 2, 2);
      b = {n - 2, n - 1};
      descending(b, n - 3, 1);
      b.push_back(n);
      break;
    case Family::F_E123_312:
      // 1 n (n-2) (n-1) (n-3) ... 2  and  (n-1) (n-3) (n-2) (n-4) ... 1 n
      if (n < 5) throw InvalidInput("extra elements for (;123,312) are defined for n >= 5");
      a = {1, n, n - 2, n - 1};
      descending(a, n - 3, 2);
      b = {n - 1, n - 3, n - 2};
      descending(b, n - 4, 1);
      b.push_back(n);
      break;
    default:
      break;
  }
  return {Permutation(std::move(a)), Permutation(std::move(b))};
}

std::vector<Permutation> generate(Family f, int n, const EnumerationOptions& opts) {
  const int base = family_base_size(f);
  if (n < base)
    throw InvalidInput("family " + family_spec(f).text() + " is generated from n = " +
                       std::to_string(base) + ", got n = " + std::to_string(n));
  std::vector<Permutation> current = base_set(f, opts);
  for (int m = base + 1; m <= n; ++m) {
    std::vector<Permutation> next;
    next.reserve(current.size() * 2 + 2);
    for (const auto& pi : current) {
      next.push_back(shift_append_one(pi));
      if (!uses_extras(f)) next.push_back(append_maximum(pi));
    }
    for (auto& extra : extra_elements(f, m)) next.push_back(std::move(extra));
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());
  return current;
}

}  // namespace permpat
