#include <gtest/gtest.h>

#include <set>

#include "permpat/enumerate.hpp"
#include "permpat/error.hpp"
#include "permpat/occurrence.hpp"
#include "permpat/symmetry.hpp"
#include "support/brute_oracle.hpp"

using namespace permpat;

namespace {

// Textbook definitions, written independently of the library.
oracle::Word rev(oracle::Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}
oracle::Word comp(oracle::Word w) {
  const int n = static_cast<int>(w.size());
  for (int& v : w) v = n + 1 - v;
  return w;
}
oracle::Word inv(const oracle::Word& w) {
  oracle::Word out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out[static_cast<std::size_t>(w[j] - 1)] = static_cast<int>(j + 1);
  return out;
}
oracle::Word act(SymmetryOp g, oracle::Word w) {
  const std::string_view nm = name(g);
  if (nm == "id") return w;
  for (auto it = nm.rbegin(); it != nm.rend(); ++it) {
    if (*it == 'i') w = inv(w);
    if (*it == 'c') w = comp(w);
    if (*it == 'r') w = rev(w);
  }
  return w;
}
oracle::Word word(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

}  // namespace

TEST(Maps, Examples) {
  const Permutation p{1, 3, 4, 2};
  EXPECT_EQ(reverse(p), (Permutation{2, 4, 3, 1}));
  EXPECT_EQ(complement(p), (Permutation{4, 2, 1, 3}));
  EXPECT_EQ(inverse(p), (Permutation{1, 4, 2, 3}));
  EXPECT_EQ(apply(SymmetryOp::rc, p), (Permutation{3, 1, 2, 4}));
}

TEST(Maps, InvolutionsAndCommutation) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : iter_sn(n)) {
      EXPECT_EQ(reverse(reverse(pi)), pi);
      EXPECT_EQ(complement(complement(pi)), pi);
      EXPECT_EQ(inverse(inverse(pi)), pi);
      EXPECT_EQ(reverse(complement(pi)), complement(reverse(pi)));
      EXPECT_EQ(inverse(reverse(pi)), complement(inverse(pi)));
      EXPECT_EQ(inverse(complement(pi)), reverse(inverse(pi)));
    }
}

TEST(Group, ActionMatchesDefinitions) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : oracle::all_words(n))
      for (auto g : kAllSymmetries) ASSERT_EQ(word(apply(g, Permutation(w))), act(g, w)) << name(g);
}

TEST(Group, CompositionTableAgreesWithAction) {
  const auto s4 = oracle::all_words(4);
  for (auto g : kAllSymmetries)
    for (auto h : kAllSymmetries) {
      const SymmetryOp gh = compose(g, h);
      for (const auto& w : s4) ASSERT_EQ(act(gh, w), act(g, act(h, w))) << name(g) << " o " << name(h);
    }
}

TEST(Group, IsAGroupOfOrderEight) {
  std::set<SymmetryOp> seen(kAllSymmetries.begin(), kAllSymmetries.end());
  EXPECT_EQ(seen.size(), 8u);
  for (auto g : kAllSymmetries) {
    EXPECT_EQ(compose(g, SymmetryOp::id), g);
    EXPECT_EQ(compose(SymmetryOp::id, g), g);
    EXPECT_EQ(compose(g, inverse_op(g)), SymmetryOp::id);
    for (auto h : kAllSymmetries)
      for (auto k : kAllSymmetries) EXPECT_EQ(compose(compose(g, h), k), compose(g, compose(h, k)));
  }
  static_assert(compose(SymmetryOp::i, SymmetryOp::r) == SymmetryOp::ci);
  static_assert(compose(SymmetryOp::r, SymmetryOp::c) == SymmetryOp::rc);
}

TEST(Group, Names) {
  for (auto g : kAllSymmetries) EXPECT_EQ(parse_symmetry(name(g)), g);
  EXPECT_EQ(parse_symmetry("identity"), SymmetryOp::id);
  EXPECT_THROW(parse_symmetry("x"), InvalidInput);
  EXPECT_THROW(parse_symmetry("cr"), InvalidInput);
}

TEST(Equivariance, OccurrenceCountsExhaustive) {
  const auto pats = all_patterns(3);
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : iter_sn(n))
      for (const auto& alpha : pats)
        for (auto g : kAllSymmetries)
          ASSERT_EQ(count_occurrences(apply(g, pi), apply(g, alpha)), count_occurrences(pi, alpha));
}

TEST(Equivariance, Membership) {
  std::vector<RestrictionSpec> specs = ordered_pair_specs();
  for (const auto& s : multiset_pair_specs()) specs.push_back(s);
  specs.push_back(parse_spec("(;132^2)"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& pi : iter_sn(n))
      for (const auto& spec : specs)
        for (auto g : kAllSymmetries)
          ASSERT_EQ(satisfies(apply(g, pi), apply_to_spec(g, spec)), satisfies(pi, spec));
}

TEST(Orbit, SpecExamples) {
  const auto s = parse_spec("(123;132)");
  EXPECT_EQ(apply_to_spec(SymmetryOp::r, s), parse_spec("(321;231)"));
  EXPECT_EQ(apply_to_spec(SymmetryOp::c, s), parse_spec("(321;312)"));
  EXPECT_EQ(apply_to_spec(SymmetryOp::i, s), s);
  EXPECT_EQ(apply_to_spec(SymmetryOp::rc, parse_spec("(;132,213)")), parse_spec("(;132,213)"));
}

TEST(Orbit, Sizes) {
  EXPECT_EQ(orbit(parse_spec("(123;231)")).size(), 4u);
  EXPECT_EQ(orbit(parse_spec("(132;321)")).size(), 4u);
  EXPECT_EQ(orbit(parse_spec("(132;213)")).size(), 4u);
  EXPECT_EQ(orbit(parse_spec("(123;132)")).size(), 4u);
  EXPECT_EQ(orbit(parse_spec("(132;231)")).size(), 8u);
  EXPECT_EQ(orbit(parse_spec("(123,321;)")).size(), 1u);
  EXPECT_EQ(orbit(parse_spec("(;132,213)")).size(), 2u);
}

TEST(Orbit, PartitionsThePairSets) {
  std::set<RestrictionSpec> reps;
  std::size_t covered = 0;
  for (const auto& s : ordered_pair_specs()) {
    const auto o = orbit(s);
    EXPECT_TRUE(std::is_sorted(o.begin(), o.end()));
    EXPECT_NE(std::find(o.begin(), o.end(), s), o.end());
    EXPECT_EQ(orbit_representative(s), o.front());
    for (const auto& t : o) EXPECT_EQ(orbit(t), o);
    if (reps.insert(o.front()).second) covered += o.size();
  }
  EXPECT_EQ(covered, 30u);
}
