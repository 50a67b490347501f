#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "permpat/classify.hpp"
#include "permpat/json.hpp"

using namespace permpat;

namespace {

std::vector<RestrictionSpec> both_sets() {
  auto specs = ordered_pair_specs();
  for (const auto& s : multiset_pair_specs()) specs.push_back(s);
  return specs;
}

std::vector<std::size_t> sizes(const ClassReport& r) {
  std::vector<std::size_t> out;
  for (const auto& c : r.classes) out.push_back(c.members.size());
  std::sort(out.begin(), out.end());
  return out;
}

const SpecClass& class_of(const ClassReport& r, std::string_view spec) {
  const auto s = parse_spec(spec);
  for (const auto& c : r.classes)
    if (std::find(c.members.begin(), c.members.end(), s) != c.members.end()) return c;
  throw std::runtime_error("spec missing from report");
}

const EnumerationOptions kOpts{.threads = 0, .kernel = CountKernel::fast3};

}  // namespace

TEST(Classify, OrderedPairs) {
  const auto specs = ordered_pair_specs();
  const auto report = classify(specs, 3, 8, kOpts);
  EXPECT_EQ(report.method_note, "empirical over window");
  EXPECT_EQ(sizes(report), (std::vector<std::size_t>{2, 4, 8, 8, 8}));
  EXPECT_EQ(class_of(report, "(123;231)").members.size(), 8u);
  EXPECT_EQ(class_of(report, "(123;231)").members, class_of(report, "(132;321)").members);
  EXPECT_EQ(class_of(report, "(123;321)").witness, (std::vector<std::uint64_t>{1, 6, 8, 0, 0, 0}));
  EXPECT_TRUE(reconcile(report).consistent());
}

TEST(Classify, Multisets) {
  const auto specs = multiset_pair_specs();
  const auto report = classify(specs, 4, 8, kOpts);
  EXPECT_EQ(sizes(report), (std::vector<std::size_t>{1, 2, 4, 4, 4}));
  EXPECT_EQ(class_of(report, "(;132,213)").witness, (std::vector<std::uint64_t>{3, 6, 17, 42, 102}));
  const auto rec = reconcile(report);
  EXPECT_TRUE(rec.consistent());
  for (const auto& c : rec.classes) EXPECT_EQ(c.verdict, Verdict::matches);
}

TEST(Classify, MixedFusionAcrossSets) {
  const auto specs = both_sets();
  const auto report = classify(specs, 5, 8, kOpts);
  const auto& cg = class_of(report, "(123;231)");
  EXPECT_EQ(cg.members.size(), 12u);
  EXPECT_EQ(cg.members, class_of(report, "(;123,231)").members);
  EXPECT_EQ(class_of(report, "(132;231)").members.size(), 12u);
  const auto rec = reconcile(report);
  EXPECT_TRUE(rec.consistent()) << (rec.discrepancies.empty() ? "" : rec.discrepancies.front());
  std::size_t fusions = 0;
  for (const auto& c : rec.classes) fusions += c.verdict == Verdict::mixed_restriction_fusion;
  EXPECT_EQ(fusions, 2u);
}

TEST(Classify, FusionNotYetValidIsADiscrepancyFreeSplit) {
  // At n = 4 the C and G sequences still differ, so they must not merge.
  const auto report = classify(both_sets(), 4, 7, kOpts);
  EXPECT_NE(class_of(report, "(123;231)").members, class_of(report, "(;123,231)").members);
  EXPECT_EQ(class_of(report, "(132;231)").members.size(), 12u);
  EXPECT_TRUE(reconcile(report).consistent());
}

TEST(Classify, AllZeroWindowIsIndistinguishable) {
  std::vector<RestrictionSpec> specs{parse_spec("(123;321)"), parse_spec("(321;123)"), parse_spec("(;123,321)")};
  const auto report = classify(specs, 6, 8, kOpts);
  ASSERT_EQ(report.classes.size(), 1u);
  const auto rec = reconcile(report);
  EXPECT_TRUE(rec.consistent());
  EXPECT_EQ(rec.classes[0].verdict, Verdict::indistinguishable);
  EXPECT_TRUE(rec.classes[0].fused_beyond_symmetry);
}

TEST(Classify, UnknownSpecHasNoFormula) {
  std::vector<RestrictionSpec> specs{parse_spec("(;132^2)")};
  const auto rec = reconcile(classify(specs, 4, 7, kOpts));
  ASSERT_EQ(rec.classes.size(), 1u);
  EXPECT_EQ(rec.classes[0].verdict, Verdict::no_formula);
}

TEST(Classify, InjectedSourceDisagreementIsReported) {
  // A source that lies about one spec splits class B.
  CountSource liar = [](const RestrictionSpec& s, int n) -> std::uint64_t {
    if (s == parse_spec("(123;132)") && n == 6) return 0;
    return count(n, s, kOpts);
  };
  const auto specs = ordered_pair_specs();
  const auto rec = reconcile(classify(specs, 3, 7, kOpts, liar));
  EXPECT_FALSE(rec.consistent());
}

TEST(Classify, InputOrderAndDuplicatesDoNotMatter) {
  auto specs = both_sets();
  const auto base = classify(specs, 5, 7, kOpts);
  std::mt19937 rng(9);
  std::shuffle(specs.begin(), specs.end(), rng);
  specs.push_back(specs.front());
  const auto shuffled = classify(specs, 5, 7, kOpts);
  EXPECT_EQ(to_json(base), to_json(shuffled));
}

TEST(Classify, WiderWindowOnlyRefines) {
  const auto specs = both_sets();
  const auto narrow = classify(specs, 5, 7, kOpts);
  const auto wide = classify(specs, 4, 8, kOpts);
  for (const auto& c : wide.classes) {
    const auto& outer = class_of(narrow, c.representative.text());
    for (const auto& m : c.members) EXPECT_NE(std::find(outer.members.begin(), outer.members.end(), m), outer.members.end());
  }
}

TEST(Classify, JsonShape) {
  const auto specs = multiset_pair_specs();
  const auto report = classify(specs, 4, 6, kOpts);
  const auto j = to_json(report, reconcile(report));
  EXPECT_EQ(j["window"], nlohmann::json::array({4, 6}));
  EXPECT_EQ(j["classes"].size(), 5u);
  EXPECT_TRUE(j["discrepancies"].empty());
  EXPECT_EQ(j["classes"][0]["verdict"], "matches");
}
