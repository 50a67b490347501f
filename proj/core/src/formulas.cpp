#include "permpat/formulas.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "permpat/error.hpp"
#include "permpat/symmetry.hpp"

namespace permpat {

namespace {

using R = Rational;

RestrictionSpec spec(std::string_view text) { return parse_spec(text); }

FormulaEntry make(ClassId id, std::vector<std::string_view> reps, std::string display, int valid_from,
                  std::vector<std::pair<int, std::uint64_t>> exceptions,
                  std::function<Rational(std::int64_t)> form) {
  FormulaEntry e{id, {}, {}, std::move(display), valid_from, std::move(exceptions), std::move(form)};
  for (auto r : reps) {
    e.representatives.push_back(spec(r));
    for (auto& m : orbit(e.representatives.back())) e.members.push_back(std::move(m));
  }
  std::sort(e.members.begin(), e.members.end());
  e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
  return e;
}

// A length-3 pattern cannot occur in fewer than three letters.
const std::vector<std::pair<int, std::uint64_t>> kShort = {{1, 0}, {2, 0}};
const std::vector<std::pair<int, std::uint64_t>> kShortPair = {{1, 0}, {2, 0}, {3, 0}};

template <class... Extra>
std::vector<std::pair<int, std::uint64_t>> with(const std::vector<std::pair<int, std::uint64_t>>& base,
                                                Extra... extra) {
  auto out = base;
  (out.push_back(extra), ...);
  return out;
}

std::vector<FormulaEntry> build_table() {
  std::vector<FormulaEntry> t;
  t.push_back(make(ClassId::SingleAvoid, {"(123;)", "(132;)"}, "C(2n,n)/(n+1)", 1, {},
                   [](std::int64_t n) { return choose(2 * n, n) / R(n + 1); }));
  t.push_back(make(ClassId::PairAvoidPower,
                   {"(123,132;)", "(123,213;)", "(132,213;)", "(132,231;)", "(132,312;)",
                    "(213,231;)", "(213,312;)", "(231,312;)", "(231,321;)", "(312,321;)"},
                   "2^(n-1)", 2, {{1, 1}}, [](std::int64_t n) { return pow2(int(n) - 1); }));
  t.push_back(make(ClassId::PairAvoidBinomial, {"(123,231;)", "(123,312;)", "(132,321;)", "(213,321;)"},
                   "C(n,2)+1", 1, {}, [](std::int64_t n) { return choose(n, 2) + R(1); }));
  t.push_back(make(ClassId::PairAvoidZero, {"(123,321;)"}, "0", 5, {},
                   [](std::int64_t) { return R(0); }));
  t.push_back(make(ClassId::SingleContain123, {"(;123)"}, "3/n*C(2n,n+3)", 1, {},
                   [](std::int64_t n) { return R(3, n) * choose(2 * n, n + 3); }));
  t.push_back(make(ClassId::SingleContain132, {"(;132)"}, "C(2n-3,n-3)", 3, kShort,
                   [](std::int64_t n) { return choose(2 * n - 3, n - 3); }));

  t.push_back(make(ClassId::A, {"(123;321)"}, "0", 6, kShort, [](std::int64_t) { return R(0); }));
  t.push_back(make(ClassId::B, {"(123;132)", "(132;123)"}, "(n-2)*2^(n-3)", 3, kShort,
                   [](std::int64_t n) { return R(n - 2) * pow2(int(n) - 3); }));
  t.push_back(make(ClassId::C, {"(123;231)", "(132;321)"}, "2n-5", 3, kShort,
                   [](std::int64_t n) { return R(2 * n - 5); }));
  t.push_back(make(ClassId::D, {"(132;213)"}, "n*2^(n-5)", 4, with(kShort, std::pair<int, std::uint64_t>{3, 1}),
                   [](std::int64_t n) { return R(n) * pow2(int(n) - 5); }));
  t.push_back(make(ClassId::E, {"(132;231)"}, "2^(n-3)", 3, kShort,
                   [](std::int64_t n) { return pow2(int(n) - 3); }));

  t.push_back(make(ClassId::F, {"(;123,321)"}, "0", 6, kShortPair, [](std::int64_t) { return R(0); }));
  t.push_back(make(ClassId::G, {"(;123,231)"}, "2n-5", 5,
                   with(kShortPair, std::pair<int, std::uint64_t>{4, 2}),
                   [](std::int64_t n) { return R(2 * n - 5); }));
  t.push_back(make(ClassId::H, {"(;123,132)"}, "(n-3)(n-4)*2^(n-5)", 5, kShortPair,
                   [](std::int64_t n) { return R(n - 3) * R(n - 4) * pow2(int(n) - 5); }));
  t.push_back(make(ClassId::I, {"(;132,213)"}, "(n^2+21n-28)*2^(n-9)", 7,
                   with(kShortPair, std::pair<int, std::uint64_t>{4, 3},
                        std::pair<int, std::uint64_t>{5, 6}, std::pair<int, std::uint64_t>{6, 17}),
                   [](std::int64_t n) { return R(n * n + 21 * n - 28) * pow2(int(n) - 9); }));
  t.push_back(make(ClassId::J, {"(;132,231)"}, "2^(n-3)", 4, kShortPair,
                   [](std::int64_t n) { return pow2(int(n) - 3); }));

  // Orbits must not overlap: a spec has one closed form.
  std::map<RestrictionSpec, ClassId> owner;
  for (const auto& e : t)
    for (const auto& m : e.members)
      if (!owner.emplace(m, e.id).second)
        throw InternalConsistency("spec " + m.text() + " listed under two ledger entries");
  return t;
}

const std::map<RestrictionSpec, std::size_t>& index() {
  static const auto idx = [] {
    std::map<RestrictionSpec, std::size_t> m;
    const auto& t = known_table();
    for (std::size_t i = 0; i < t.size(); ++i)
      for (const auto& s : t[i].members) m.emplace(s, i);
    return m;
  }();
  return idx;
}

constexpr std::array<MixedEquivalence, 2> kMixed = {{
    {ClassId::C, ClassId::G, 5},
    {ClassId::E, ClassId::J, 4},
}};

}  // namespace

std::string_view name(ClassId id) {
  switch (id) {
    case ClassId::A: return "A";
    case ClassId::B: return "B";
    case ClassId::C: return "C";
    case ClassId::D: return "D";
    case ClassId::E: return "E";
    case ClassId::F: return "F";
    case ClassId::G: return "G";
    case ClassId::H: return "H";
    case ClassId::I: return "I";
    case ClassId::J: return "J";
    case ClassId::SingleAvoid: return "SINGLE_AVOID";
    case ClassId::SingleContain123: return "SINGLE_CONTAIN_123";
    case ClassId::SingleContain132: return "SINGLE_CONTAIN_132";
    case ClassId::PairAvoidPower: return "SS_2A";
    case ClassId::PairAvoidBinomial: return "SS_2B";
    case ClassId::PairAvoidZero: return "SS_2C";
  }
  return "?";
}

std::optional<ClassId> parse_class_id(std::string_view text) {
  for (const auto& e : known_table())
    if (name(e.id) == text) return e.id;
  return std::nullopt;
}

const std::vector<FormulaEntry>& known_table() {
  static const std::vector<FormulaEntry> table = build_table();
  return table;
}

const FormulaEntry* lookup(const RestrictionSpec& spec) {
  const auto& idx = index();
  auto it = idx.find(spec);
  return it == idx.end() ? nullptr : &known_table()[it->second];
}

const FormulaEntry& entry(ClassId id) {
  for (const auto& e : known_table())
    if (e.id == id) return e;
  throw InternalConsistency("no ledger entry for class " + std::string(name(id)));
}

std::optional<std::uint64_t> eval(const FormulaEntry& e, int n) {
  if (n < 1) throw InvalidInput("formula evaluation needs n >= 1");
  for (const auto& [en, value] : e.exceptions)
    if (en == n) return value;
  if (n < e.valid_from) return std::nullopt;
  const Rational v = e.closed_form(n);
  if (!v.is_integer() || v.num() < 0)
    throw InternalConsistency("class " + std::string(name(e.id)) + " formula " + e.display +
                              " gives " + v.str() + " at n = " + std::to_string(n));
  return static_cast<std::uint64_t>(v.num());
}

std::span<const MixedEquivalence> mixed_equivalences() { return kMixed; }

}  // namespace permpat
