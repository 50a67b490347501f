#include <gtest/gtest.h>

#include "permpat/enumerate.hpp"
#include "permpat/error.hpp"
#include "permpat/symmetry.hpp"
#include "support/brute_oracle.hpp"

using namespace permpat;

namespace {

oracle::Spec to_oracle(const RestrictionSpec& s) {
  oracle::Spec o;
  for (const auto& a : s.avoid()) o.avoid.emplace_back(a.word().begin(), a.word().end());
  for (const auto& c : s.contain()) o.contain.emplace_back(oracle::Word(c.pattern.word().begin(), c.pattern.word().end()), c.multiplicity);
  return o;
}

std::vector<Permutation> perms(std::initializer_list<std::initializer_list<int>> ws) {
  std::vector<Permutation> out;
  for (auto w : ws) out.emplace_back(w);
  return out;
}

std::vector<RestrictionSpec> all_pair_specs() {
  auto specs = ordered_pair_specs();
  for (const auto& s : multiset_pair_specs()) specs.push_back(s);
  return specs;
}

}  // namespace

TEST(IterSn, LexicographicAndComplete) {
  std::vector<Permutation> s3;
  for (const auto& p : iter_sn(3)) s3.push_back(p);
  ASSERT_EQ(s3.size(), 6u);
  EXPECT_EQ(s3.front(), (Permutation{1, 2, 3}));
  EXPECT_EQ(s3.back(), (Permutation{3, 2, 1}));
  std::uint64_t fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= static_cast<std::uint64_t>(n);
    std::uint64_t seen = 0;
    Permutation prev;
    for (const auto& p : iter_sn(n)) {
      if (seen) ASSERT_LT(prev, p);
      prev = p;
      ++seen;
    }
    EXPECT_EQ(seen, fact);
    EXPECT_EQ(iter_sn(n).size(), fact);
  }
}

TEST(IterSn, Limits) {
  EXPECT_THROW(iter_sn(11), ResourceLimit);
  EXPECT_NO_THROW(iter_sn(11, 11));
  EXPECT_THROW(iter_sn(-1), InvalidInput);
  EXPECT_THROW(count(11, parse_spec("(123;)")), ResourceLimit);
  EXPECT_THROW(members(12, parse_spec("(123;)"), {.max_n = 11}), ResourceLimit);
}

TEST(Satisfies, Examples) {
  EXPECT_TRUE(satisfies(Permutation{3, 1, 4, 2}, parse_spec("(123;312)")));
  EXPECT_FALSE(satisfies(Permutation{1, 2, 3, 4}, parse_spec("(123;312)")));
  EXPECT_FALSE(satisfies(Permutation{1, 2, 3}, parse_spec("(;132,213)")));
}

TEST(Members, Examples) {
  EXPECT_EQ(members(4, parse_spec("(123;312)")), perms({{2, 4, 1, 3}, {3, 1, 4, 2}, {4, 2, 3, 1}}));
  EXPECT_EQ(members(5, parse_spec("(;123,312)")),
            perms({{1, 5, 3, 4, 2}, {2, 4, 1, 5, 3}, {2, 5, 3, 4, 1}, {4, 2, 3, 1, 5}, {4, 2, 3, 5, 1}}));
  EXPECT_EQ(members(3, parse_spec("(;312)")), perms({{3, 1, 2}}));
  EXPECT_EQ(members(5, parse_spec("(132;312)")), perms({{3, 1, 2, 4, 5}, {4, 2, 3, 1, 5}, {4, 2, 3, 5, 1}, {5, 3, 4, 2, 1}}));
  EXPECT_TRUE(members(5, parse_spec("(123,321;)")).empty());
  EXPECT_EQ(members(5, parse_spec("(;123,321)")).size(), 2u);
}

TEST(Count, SmallSequences) {
  auto seq = [](std::string_view s, int a, int b) {
    std::vector<std::uint64_t> out;
    for (int n = a; n <= b; ++n) out.push_back(count(n, parse_spec(s)));
    return out;
  };
  EXPECT_EQ(seq("(123;132)", 3, 6), (std::vector<std::uint64_t>{1, 4, 12, 32}));
  EXPECT_EQ(seq("(;132,213)", 4, 7), (std::vector<std::uint64_t>{3, 6, 17, 42}));
  EXPECT_EQ(seq("(123;321)", 1, 6), (std::vector<std::uint64_t>{0, 0, 1, 6, 8, 0}));
  EXPECT_EQ(seq("(;132^2)", 1, 7), (std::vector<std::uint64_t>{0, 0, 0, 4, 23, 107, 464}));
  EXPECT_EQ(seq("(;123,132)", 1, 6), (std::vector<std::uint64_t>{0, 0, 0, 0, 2, 12}));
  EXPECT_EQ(seq("(123;)", 1, 6), (std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132}));
}

TEST(Count, MatchesOracleForAllPairs) {
  for (const auto& spec : all_pair_specs()) {
    const auto o = to_oracle(spec);
    for (int n = 1; n <= 6; ++n) {
      const auto expected = oracle::members(n, o);
      const auto got = members(n, spec);
      ASSERT_EQ(got.size(), expected.size()) << spec.text() << " n=" << n;
      for (std::size_t j = 0; j < got.size(); ++j)
        ASSERT_TRUE(std::equal(got[j].word().begin(), got[j].word().end(), expected[j].begin(), expected[j].end()));
      ASSERT_EQ(count(n, spec), expected.size());
    }
  }
}

TEST(Count, ConstantOnOrbits) {
  for (const auto& spec : all_pair_specs())
    for (const auto& other : orbit(spec))
      for (int n = 1; n <= 6; ++n) ASSERT_EQ(count(n, other), count(n, spec)) << spec.text() << " vs " << other.text();
}

TEST(Count, ParallelEqualsSerial) {
  EnumerationOptions par{.threads = 4};
  EnumerationOptions hw{.threads = 0};
  for (const auto& spec : all_pair_specs())
    for (int n : {1, 2, 5, 8}) {
      const auto serial = count(n, spec);
      ASSERT_EQ(count(n, spec, par), serial) << spec.text() << " n=" << n;
      ASSERT_EQ(count(n, spec, hw), serial);
    }
  EXPECT_EQ(members(7, parse_spec("(;132,213)"), par), members(7, parse_spec("(;132,213)")));
}

TEST(Count, FastKernelEqualsNaive) {
  EnumerationOptions fast{.kernel = CountKernel::fast3};
  auto specs = all_pair_specs();
  specs.push_back(parse_spec("(;132^2)"));
  specs.push_back(parse_spec("(1234;123)"));
  for (const auto& spec : specs)
    for (int n = 1; n <= 7; ++n) ASSERT_EQ(count(n, spec, fast), count(n, spec)) << spec.text() << " n=" << n;
}

TEST(Count, EmptySpecIsFactorial) {
  EXPECT_EQ(count(0, RestrictionSpec{}), 1u);
  EXPECT_EQ(count(6, RestrictionSpec{}), 720u);
}

TEST(Sequence, Record) {
  const auto rec = sequence(parse_spec("(;132,213)"), 4, 7);
  EXPECT_EQ(rec.n_min, 4);
  EXPECT_EQ(rec.n_max, 7);
  EXPECT_EQ(rec.method, Method::brute);
  EXPECT_EQ(rec.values, (std::vector<std::uint64_t>{3, 6, 17, 42}));
  EXPECT_THROW(sequence(parse_spec("(123;)"), 5, 4), InvalidInput);
  EXPECT_THROW(sequence(parse_spec("(123;)"), 1, 11), ResourceLimit);
}

TEST(Method, Names) {
  for (auto m : {Method::brute, Method::formula, Method::generator}) EXPECT_EQ(parse_method(name(m)), m);
  EXPECT_THROW(parse_method("magic"), InvalidInput);
}

TEST(Restriction, CanonicalTextRoundTrip) {
  EXPECT_EQ(parse_spec("(312;123)").text(), "(312;123)");
  EXPECT_EQ(parse_spec("(;213,132)").text(), "(;132,213)");
  EXPECT_EQ(parse_spec("(;132,132)").text(), "(;132^2)");
  EXPECT_EQ(parse_spec("321,123;").text(), "(123,321;)");
  EXPECT_THROW(parse_spec("(123;123)"), InvalidInput);
  EXPECT_THROW(parse_spec("(;132^0)"), InvalidInput);
  EXPECT_THROW(parse_spec("(12x;)"), InvalidInput);
  for (const auto& s : all_pair_specs()) EXPECT_EQ(parse_spec(s.text()), s);
  EXPECT_EQ(ordered_pair_specs().size(), 30u);
  EXPECT_EQ(multiset_pair_specs().size(), 15u);
}
