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

#ifndef LDQ_AGGREGATE_AGGREGATE_H_
#define LDQ_AGGREGATE_AGGREGATE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ldq/metrics/result.h"
#include "ldq/taxonomy/taxonomy.h"

namespace ldq {

enum class Direction { kHigherBetter, kLowerBetter };
enum class Combinator { kMean, kMin, kGeomean };

std::string_view DirectionName(Direction d);
std::string_view CombinatorName(Combinator c);

// Maps a count or duration onto [0, 1] against `target`. Set results use
// only the direction.
struct Normalizer {
  double target = 1.0;
  Direction direction = Direction::kHigherBetter;
  friend bool operator==(const Normalizer&, const Normalizer&) = default;
};

// Which measures count and how they combine. Ids are canonical taxonomy ids.
struct Profile {
  std::string name;
  // Absent ids weigh 1.
  std::map<std::string, double> weights;
  std::set<std::string> disabled;
  // Ids an override re-enables; see MergeProfiles.
  std::set<std::string> enabled;
  std::map<std::string, Normalizer> normalizers;
  // Absent ids combine with the weighted mean.
  std::map<std::string, Combinator> combinators;
  // Weight of a node's own measurement next to its children; absent ids
  // weigh 1.
  std::map<std::string, double> self_weights;

  double WeightOf(std::string_view id) const;
  double SelfWeightOf(std::string_view id) const;
  Combinator CombinatorOf(std::string_view id) const;
  bool IsEnabled(std::string_view id) const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

// JSON form: {name, weights: {id: number}, disabled: [id], enabled: [id],
// normalizers: {id: {target, direction: "higher-better" | "lower-better"}},
// combinator: {id: "mean" | "min" | "geomean"}, self_weights: {id: number}}.
// Ids may be aliases and are stored canonical. Throws kUnknownCategory for
// ids the taxonomy lacks and kConfiguration for malformed or invalid input.
Profile ParseProfile(std::string_view json, const TaxonomyGraph& taxonomy);
std::string ProfileToJson(const Profile& profile);

// Throws kConfiguration when a weight is negative, a normalizer target is
// not positive, or a normalizer names a category whose result kind is not
// count, duration or set.
void ValidateProfile(const Profile& profile, const TaxonomyGraph& taxonomy);

// Override entries replace default entries key by key. The disabled set is
// (default.disabled + override.disabled) - override.enabled. The name is the
// override's when it has one.
Profile MergeProfiles(const Profile& base, const Profile& override_profile);

// Categories with a runnable evaluator that `profile` leaves enabled.
std::set<std::string> EnabledCategories(const Profile& profile, const TaxonomyGraph& taxonomy);

// boolean -> 0 or 1; ratio and score -> value clamped to [0, 1];
// count higher-better -> min(v / T, 1), lower-better -> min(T / v, 1) with
// v = 0 giving 1; duration likewise; set higher-better -> members /
// universe, lower-better -> 1 - members / universe. Throws kConfiguration
// when a count or duration has no normalizer or a set has no universe.
double Normalize(const MetricResult& result, const Profile& profile);

enum class NodeStatus { kMeasured, kAggregated, kDeclaredOnly, kUnassessed, kError, kDisabled };
std::string_view NodeStatusName(NodeStatus status);

struct Contribution {
  // A child id, or the node's own id for its self-measurement.
  std::string source;
  double weight = 0.0;
  double score = 0.0;
};

struct AssessedNode {
  std::string id;
  NodeStatus status = NodeStatus::kDeclaredOnly;
  std::optional<double> score;
  std::optional<double> own_score;
  std::vector<MetricResult> results;
  // Sorted by source id.
  std::vector<Contribution> contributions;
  std::vector<std::string> diagnostics;
};

// Why a category without results has none.
struct NodeIssue {
  std::string id;
  NodeStatus status = NodeStatus::kUnassessed;  // kUnassessed or kError
  std::string message;
};

class AssessmentTree {
 public:
  // Nodes in taxonomy insertion order.
  const std::vector<AssessedNode>& nodes() const { return nodes_; }
  // Throws kUnknownCategory.
  const AssessedNode& Get(std::string_view id) const;
  std::optional<double> ScoreOf(std::string_view id) const { return Get(id).score; }

 private:
  friend AssessmentTree Aggregate(const TaxonomyGraph&, const std::vector<MetricResult>&,
                                  const Profile&, const std::vector<NodeIssue>&);
  std::vector<AssessedNode> nodes_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// Rolls normalized results up the taxonomy. A node's score combines its
// scored, enabled children (positive weight only) and, when measured, its
// own mean normalized result with its self weight. Disabled, error and
// declared-only nodes never contribute. A node left without a score is
// declared-only when neither it nor a descendant has an evaluator and
// unassessed otherwise. Independent of the order of `results`.
// Throws kUnknownCategory for results on unknown categories.
AssessmentTree Aggregate(const TaxonomyGraph& taxonomy, const std::vector<MetricResult>& results,
                         const Profile& profile, const std::vector<NodeIssue>& issues = {});

}  // namespace ldq

#endif  // LDQ_AGGREGATE_AGGREGATE_H_
