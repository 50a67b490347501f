#include <gtest/gtest.h>

#include <set>

#include "permpat/enumerate.hpp"
#include "permpat/error.hpp"
#include "permpat/formulas.hpp"
#include "permpat/generators.hpp"

using namespace permpat;

namespace {

std::vector<Permutation> perms(std::initializer_list<std::initializer_list<int>> ws) {
  std::vector<Permutation> out;
  for (auto w : ws) out.emplace_back(w);
  return out;
}

bool uses_maps_only(Family f) { return f == Family::F_132_312 || f == Family::F_E132_312; }

}  // namespace

TEST(FamilyMaps, Examples) {
  EXPECT_EQ(shift_append_one(Permutation{2, 1, 3}), (Permutation{3, 2, 4, 1}));
  EXPECT_EQ(append_maximum(Permutation{2, 1, 3}), (Permutation{2, 1, 3, 4}));
  EXPECT_EQ(shift_append_one(Permutation()), (Permutation{1}));
  EXPECT_EQ(append_maximum(Permutation()), (Permutation{1}));
}

TEST(Extras, HandExpansions) {
  EXPECT_EQ(extra_elements(Family::F_123_312, 4), perms({{3, 1, 4, 2}, {2, 4, 1, 3}}));
  EXPECT_EQ(extra_elements(Family::F_123_312, 6), perms({{3, 1, 6, 5, 4, 2}, {4, 3, 2, 6, 1, 5}}));
  EXPECT_EQ(extra_elements(Family::F_312_123, 4), perms({{1, 3, 4, 2}, {2, 3, 1, 4}}));
  EXPECT_EQ(extra_elements(Family::F_312_123, 6), perms({{1, 5, 6, 4, 3, 2}, {4, 5, 3, 2, 1, 6}}));
  EXPECT_EQ(extra_elements(Family::F_E123_312, 5), perms({{1, 5, 3, 4, 2}, {4, 2, 3, 1, 5}}));
  EXPECT_EQ(extra_elements(Family::F_E123_312, 6), perms({{1, 6, 4, 5, 3, 2}, {5, 3, 4, 2, 1, 6}}));
  EXPECT_TRUE(extra_elements(Family::F_132_312, 6).empty());
  EXPECT_TRUE(extra_elements(Family::F_E132_312, 6).empty());
}

TEST(Extras, AreMembers) {
  for (auto f : kAllFamilies)
    for (int n = family_base_size(f) + 1; n <= 12; ++n)
      for (const auto& pi : extra_elements(f, n)) {
        EXPECT_EQ(pi.size(), n);
        EXPECT_TRUE(satisfies(pi, family_spec(f))) << name(f) << " " << to_string(pi);
      }
}

TEST(Families, Names) {
  for (auto f : kAllFamilies) {
    EXPECT_EQ(parse_family(name(f)), f);
    EXPECT_EQ(parse_family(family_spec(f).text()), f);
  }
  EXPECT_EQ(parse_family("132;312"), Family::F_132_312);
  EXPECT_EQ(parse_family(";123,312"), Family::F_E123_312);
  EXPECT_THROW(parse_family("123;321"), InvalidInput);
  EXPECT_THROW(generate(Family::F_E123_312, 4), InvalidInput);
}

TEST(Generate, EqualsBruteForce) {
  EnumerationOptions opts{.threads = 0};
  for (auto f : kAllFamilies)
    for (int n = family_base_size(f); n <= 9; ++n)
      ASSERT_EQ(generate(f, n), members(n, family_spec(f), opts)) << name(f) << " n=" << n;
}

TEST(Generate, SoundAndDistinctBeyondBruteForceRange) {
  for (auto f : kAllFamilies) {
    const int n = 13;
    const auto g = generate(f, n);
    EXPECT_EQ(std::set<Permutation>(g.begin(), g.end()).size(), g.size()) << name(f);
    for (const auto& pi : g) ASSERT_TRUE(satisfies(pi, family_spec(f), CountKernel::fast3)) << name(f);
    const std::uint64_t expected = uses_maps_only(f) ? (std::uint64_t{1} << (n - 3)) : std::uint64_t(2 * n - 5);
    EXPECT_EQ(g.size(), expected) << name(f);
    const auto* e = lookup(family_spec(f));
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(eval(*e, n), expected);
  }
}

TEST(Generate, MapsPreserveMembershipForMapOnlyFamilies) {
  for (auto f : {Family::F_132_312, Family::F_E132_312})
    for (int n = family_base_size(f); n <= 8; ++n)
      for (const auto& pi : members(n, family_spec(f))) {
        EXPECT_TRUE(satisfies(shift_append_one(pi), family_spec(f)));
        EXPECT_TRUE(satisfies(append_maximum(pi), family_spec(f)));
      }
}

TEST(Generate, ShiftPreservesMembershipForLinearFamilies) {
  for (auto f : {Family::F_123_312, Family::F_312_123, Family::F_E123_312})
    for (int n = std::max(family_base_size(f), 5); n <= 8; ++n)
      for (const auto& pi : members(n, family_spec(f)))
        EXPECT_TRUE(satisfies(shift_append_one(pi), family_spec(f))) << name(f) << " " << to_string(pi);
}
