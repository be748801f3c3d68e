/*
 * Copyright 2026 The ldq Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "ldq/aggregate/aggregate.h"
#include "ldq/error.h"
#include "random_cases.h"

namespace ldq {
namespace {

constexpr double kTol = 1e-12;

using testing::Category;
using testing::RatioFor;

// pm:quality -> pm:p -> {pm:a, pm:b}; pm:quality -> pm:d (declared only).
TaxonomyGraph SmallTaxonomy() {
  TaxonomyGraph t;
  t.Add(Category("pm:quality", {}, ResultKind::kScore, false));
  t.Add(Category("pm:p", {"pm:quality"}, ResultKind::kScore, false));
  t.Add(Category("pm:a", {"pm:p"}, ResultKind::kRatio, true));
  t.Add(Category("pm:b", {"pm:p"}, ResultKind::kRatio, true));
  t.Add(Category("pm:d", {"pm:quality"}, ResultKind::kBoolean, false));
  t.Add(Category("pm:n", {"pm:quality"}, ResultKind::kCount, true));
  t.Add(Category("pm:t", {"pm:quality"}, ResultKind::kDuration, true));
  t.Add(Category("pm:s", {"pm:quality"}, ResultKind::kSet, true));
  t.AddAlias("pm:alias_of_a", "pm:a");
  return t;
}

// ---- normalize ----

TEST(NormalizeTest, SpecExamples) {
  Profile p;
  MetricResult yes = MetricResult::Boolean(true);
  EXPECT_EQ(Normalize(yes, p), 1.0);
  EXPECT_EQ(Normalize(MetricResult::Boolean(false), p), 0.0);
  EXPECT_EQ(Normalize(RatioFor("pm:a", 0.4), p), 0.4);
  MetricResult count = MetricResult::Count(50);
  count.category_id = "pm:n";
  p.normalizers["pm:n"] = {100, Direction::kHigherBetter};
  EXPECT_NEAR(Normalize(count, p), 0.5, kTol);
  count.value = 500;
  EXPECT_EQ(Normalize(count, p), 1.0);
}

TEST(NormalizeTest, LowerBetterDurationsAndCounts) {
  Profile p;
  p.normalizers["pm:t"] = {1000, Direction::kLowerBetter};
  MetricResult d = MetricResult::Duration(2000);
  d.category_id = "pm:t";
  EXPECT_NEAR(Normalize(d, p), 0.5, kTol);
  d.value = 500;
  EXPECT_EQ(Normalize(d, p), 1.0);
  d.value = 0;
  EXPECT_EQ(Normalize(d, p), 1.0);
}

TEST(NormalizeTest, SetsUseShareOfUniverse) {
  Profile p;
  MetricResult s = MetricResult::Set({"a"}, 4);
  s.category_id = "pm:s";
  EXPECT_NEAR(Normalize(s, p), 0.25, kTol);
  p.normalizers["pm:s"] = {1, Direction::kLowerBetter};
  EXPECT_NEAR(Normalize(s, p), 0.75, kTol);
  MetricResult empty_universe = MetricResult::Set({}, 0);
  empty_universe.category_id = "pm:s";
  EXPECT_EQ(Normalize(empty_universe, p), 1.0);
}

TEST(NormalizeTest, MissingNormalizerIsConfigurationError) {
  MetricResult c = MetricResult::Count(3);
  c.category_id = "pm:n";
  try {
    Normalize(c, Profile{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfiguration);
  }
}

// ---- profiles ----

TEST(MergeProfilesTest, EmptyOverrideIsIdentity) {
  Profile base;
  base.name = "default";
  base.weights["pm:a"] = 2;
  base.disabled = {"pm:b"};
  base.normalizers["pm:n"] = {10, Direction::kHigherBetter};
  EXPECT_EQ(MergeProfiles(base, Profile{}), base);
}

TEST(MergeProfilesTest, DisablingOneCategoryRemovesItFromEnabledSet) {
  TaxonomyGraph t = SmallTaxonomy();
  Profile base;
  Profile o;
  o.disabled = {"pm:a"};
  std::set<std::string> expected = EnabledCategories(base, t);
  expected.erase("pm:a");
  EXPECT_EQ(EnabledCategories(MergeProfiles(base, o), t), expected);
}

TEST(MergeProfilesTest, ReweightingOneIdChangesOnlyThatWeight) {
  Profile base;
  base.weights = {{"pm:a", 1}, {"pm:b", 2}};
  Profile o;
  o.weights = {{"pm:b", 5}};
  Profile merged = MergeProfiles(base, o);
  EXPECT_EQ(merged.weights, (std::map<std::string, double>{{"pm:a", 1}, {"pm:b", 5}}));
  merged.weights = base.weights;
  EXPECT_EQ(merged, base);
}

TEST(MergeProfilesTest, OverrideReenablesDefaultDisabled) {
  Profile base;
  base.disabled = {"pm:a", "pm:b"};
  Profile o;
  o.enabled = {"pm:a"};
  Profile merged = MergeProfiles(base, o);
  EXPECT_TRUE(merged.IsEnabled("pm:a"));
  EXPECT_FALSE(merged.IsEnabled("pm:b"));
}

TEST(ParseProfileTest, ResolvesAliasesAndValidates) {
  TaxonomyGraph t = SmallTaxonomy();
  Profile p = ParseProfile(R"({"name":"x","weights":{"pm:alias_of_a":3},"disabled":["b"],
      "normalizers":{"pm:n":{"target":10,"direction":"higher-better"}},
      "combinator":{"pm:p":"min"},"self_weights":{"pm:a":2}})",
                           t);
  EXPECT_EQ(p.name, "x");
  EXPECT_EQ(p.WeightOf("pm:a"), 3.0);
  EXPECT_FALSE(p.IsEnabled("pm:b"));
  EXPECT_EQ(p.CombinatorOf("pm:p"), Combinator::kMin);
  EXPECT_EQ(ParseProfile(ProfileToJson(p), t), p);

  auto code_of = [&](const char* text) {
    try {
      ParseProfile(text, t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code_of(R"({"weights":{"pm:nope":1}})"), ErrorCode::kUnknownCategory);
  EXPECT_EQ(code_of(R"({"weights":{"pm:a":-1}})"), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of(R"({"normalizers":{"pm:a":{"target":1}}})"), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of(R"({"normalizers":{"pm:n":{"target":0}}})"), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of(R"({"combinator":{"pm:p":"max"}})"), ErrorCode::kConfiguration);
  EXPECT_EQ(code_of("[1,2"), ErrorCode::kConfiguration);
}

// ---- aggregate examples ----

TEST(AggregateTest, SingleLeafParentEqualsLeaf) {
  TaxonomyGraph t = SmallTaxonomy();
  AssessmentTree tree = Aggregate(t, {RatioFor("pm:a", 0.4)}, Profile{});
  EXPECT_EQ(tree.Get("pm:a").status, NodeStatus::kMeasured);
  EXPECT_NEAR(*tree.ScoreOf("pm:p"), 0.4, kTol);
  EXPECT_EQ(tree.Get("pm:p").status, NodeStatus::kAggregated);
  EXPECT_EQ(tree.Get("pm:b").status, NodeStatus::kUnassessed);
  EXPECT_EQ(tree.Get("pm:d").status, NodeStatus::kDeclaredOnly);
}

TEST(AggregateTest, WeightedMeanOfTwoChildren) {
  TaxonomyGraph t = SmallTaxonomy();
  Profile p;
  p.weights = {{"pm:a", 3}, {"pm:b", 1}};
  AssessmentTree tree = Aggregate(t, {RatioFor("pm:a", 1.0), RatioFor("pm:b", 0.0)}, p);
  EXPECT_NEAR(*tree.ScoreOf("pm:p"), 0.75, kTol);
}

TEST(AggregateTest, AllChildrenDisabledLeavesParentUnassessed) {
  TaxonomyGraph t = SmallTaxonomy();
  Profile p;
  p.disabled = {"pm:a", "pm:b"};
  AssessmentTree tree = Aggregate(t, {RatioFor("pm:a", 1.0), RatioFor("pm:b", 0.0)}, p);
  EXPECT_EQ(tree.Get("pm:a").status, NodeStatus::kDisabled);
  EXPECT_FALSE(tree.ScoreOf("pm:p").has_value());
  EXPECT_EQ(tree.Get("pm:p").status, NodeStatus::kUnassessed);
}

TEST(AggregateTest, ErrorAndDeclaredOnlyNeverContribute) {
  TaxonomyGraph t = SmallTaxonomy();
  AssessmentTree tree = Aggregate(t, {RatioFor("pm:a", 0.2)}, Profile{},
                                  {{"pm:b", NodeStatus::kError, "no subjects to measure"}});
  EXPECT_EQ(tree.Get("pm:b").status, NodeStatus::kError);
  EXPECT_EQ(tree.Get("pm:b").diagnostics, std::vector<std::string>{"no subjects to measure"});
  EXPECT_NEAR(*tree.ScoreOf("pm:p"), 0.2, kTol);
  EXPECT_NEAR(*tree.ScoreOf("pm:quality"), 0.2, kTol);
}

TEST(AggregateTest, UnnormalizableResultIsAnErrorNode) {
  TaxonomyGraph t = SmallTaxonomy();
  MetricResult count = MetricResult::Count(4);
  count.category_id = "pm:n";
  AssessmentTree tree = Aggregate(t, {count}, Profile{});
  EXPECT_EQ(tree.Get("pm:n").status, NodeStatus::kError);
  EXPECT_FALSE(tree.Get("pm:n").diagnostics.empty());
}

TEST(AggregateTest, SelfMeasurementJoinsChildrenWithSelfWeight) {
  TaxonomyGraph t = SmallTaxonomy();
  std::vector<MetricResult> results = {RatioFor("pm:a", 1.0), RatioFor("pm:b", 1.0),
                                       RatioFor("pm:p", 0.0)};
  Profile p;
  AssessmentTree tree = Aggregate(t, results, p);
  EXPECT_EQ(tree.Get("pm:p").status, NodeStatus::kMeasured);
  EXPECT_NEAR(*tree.ScoreOf("pm:p"), 2.0 / 3.0, kTol);
  p.self_weights["pm:p"] = 2;
  EXPECT_NEAR(*Aggregate(t, results, p).ScoreOf("pm:p"), 0.5, kTol);
}

TEST(AggregateTest, MultipleResultsPerCategoryAreAveraged) {
  TaxonomyGraph t = SmallTaxonomy();
  AssessmentTree tree = Aggregate(t, {RatioFor("pm:a", 0.2), RatioFor("pm:a", 0.6)}, Profile{});
  EXPECT_NEAR(*tree.ScoreOf("pm:a"), 0.4, kTol);
}

TEST(AggregateTest, AlternativeCombinators) {
  TaxonomyGraph t = SmallTaxonomy();
  std::vector<MetricResult> results = {RatioFor("pm:a", 0.25), RatioFor("pm:b", 1.0)};
  Profile p;
  p.combinators["pm:p"] = Combinator::kMin;
  EXPECT_NEAR(*Aggregate(t, results, p).ScoreOf("pm:p"), 0.25, kTol);
  p.combinators["pm:p"] = Combinator::kGeomean;
  EXPECT_NEAR(*Aggregate(t, results, p).ScoreOf("pm:p"), 0.5, kTol);
}

TEST(AggregateTest, UnknownCategoryResultThrows) {
  try {
    Aggregate(SmallTaxonomy(), {RatioFor("pm:missing", 1.0)}, Profile{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownCategory);
  }
}

TEST(AggregateTest, AliasResultsLandOnCanonicalNode) {
  AssessmentTree tree = Aggregate(SmallTaxonomy(), {RatioFor("pm:alias_of_a", 0.5)}, Profile{});
  EXPECT_NEAR(*tree.ScoreOf("pm:a"), 0.5, kTol);
  EXPECT_EQ(tree.Get("pm:a").results[0].category_id, "pm:a");
}

// ---- randomized properties ----

using testing::Scaled;

void ExpectSameScores(const AssessmentTree& a, const AssessmentTree& b, double tol) {
  ASSERT_EQ(a.nodes().size(), b.nodes().size());
  for (std::size_t i = 0; i < a.nodes().size(); ++i) {
    const AssessedNode& x = a.nodes()[i];
    const AssessedNode& y = b.nodes()[i];
    EXPECT_EQ(x.status, y.status) << x.id;
    ASSERT_EQ(x.score.has_value(), y.score.has_value()) << x.id;
    if (x.score) EXPECT_NEAR(*x.score, *y.score, tol) << x.id;
  }
}

TEST(AggregatePropertyTest, WeightScaleInvariance) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    testing::AggregationCase c = testing::MakeAggregationCase(rng);
    AssessmentTree base = Aggregate(c.taxonomy, c.results, c.profile);
    // Powers of two scale exactly, so the trees are identical.
    ExpectSameScores(base, Aggregate(c.taxonomy, c.results, Scaled(c.profile, c.taxonomy, 8.0)), 0.0);
    double factor = std::uniform_real_distribution<double>(0.01, 100.0)(rng);
    ExpectSameScores(base, Aggregate(c.taxonomy, c.results, Scaled(c.profile, c.taxonomy, factor)), 1e-12);
  }
}

TEST(AggregatePropertyTest, ScoresBoundedByContributions) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    testing::AggregationCase c = testing::MakeAggregationCase(rng);
    AssessmentTree tree = Aggregate(c.taxonomy, c.results, c.profile);
    for (const AssessedNode& node : tree.nodes()) {
      if (!node.score) {
        EXPECT_TRUE(node.contributions.empty()) << node.id;
        continue;
      }
      EXPECT_GE(*node.score, 0.0);
      EXPECT_LE(*node.score, 1.0);
      ASSERT_FALSE(node.contributions.empty()) << node.id;
      auto [lo, hi] = std::minmax_element(
          node.contributions.begin(), node.contributions.end(),
          [](const Contribution& a, const Contribution& b) { return a.score < b.score; });
      EXPECT_GE(*node.score, lo->score - 1e-12) << node.id;
      EXPECT_LE(*node.score, hi->score + 1e-12) << node.id;
      for (const Contribution& part : node.contributions) {
        if (part.source == node.id) continue;
        NodeStatus child = tree.Get(part.source).status;
        EXPECT_TRUE(child == NodeStatus::kMeasured || child == NodeStatus::kAggregated);
      }
    }
  }
}

TEST(AggregatePropertyTest, RaisingALeafNeverLowersAnAncestor) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 100; ++i) {
    testing::AggregationCase c = testing::MakeAggregationCase(rng);
    if (c.results.empty()) continue;
    AssessmentTree before = Aggregate(c.taxonomy, c.results, c.profile);
    std::size_t k = rng() % c.results.size();
    std::vector<MetricResult> raised = c.results;
    raised[k].value = std::min(1.0, raised[k].value + 0.3);
    AssessmentTree after = Aggregate(c.taxonomy, raised, c.profile);
    for (const std::string& id : c.taxonomy.Ancestors(raised[k].category_id)) {
      auto b = before.ScoreOf(id);
      auto a = after.ScoreOf(id);
      ASSERT_EQ(a.has_value(), b.has_value()) << id;
      if (a) EXPECT_GE(*a, *b - 1e-12) << id;
    }
  }
}

TEST(AggregatePropertyTest, IndependentOfResultOrder) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    testing::AggregationCase c = testing::MakeAggregationCase(rng);
    // Duplicate some results so per-node averaging order matters too.
    std::vector<MetricResult> results = c.results;
    for (std::size_t k = 0; k < c.results.size(); k += 3) {
      MetricResult extra = c.results[k];
      extra.value = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      results.push_back(extra);
    }
    AssessmentTree base = Aggregate(c.taxonomy, results, c.profile);
    std::shuffle(results.begin(), results.end(), rng);
    ExpectSameScores(base, Aggregate(c.taxonomy, results, c.profile), 0.0);
  }
}

}  // namespace
}  // namespace ldq
