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

#ifndef LDQ_METRICS_MEDIUM_H_
#define LDQ_METRICS_MEDIUM_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ldq/metrics/result.h"
#include "ldq/parse/format.h"
#include "ldq/parse/parser.h"
#include "ldq/rdf/graph.h"

namespace ldq {

// Static capability record of one serialization format.
struct FormatProfile {
  FormatId format = FormatId::kUnknown;
  bool is_standard = false;
  bool is_structured = false;
  bool separates_structure_from_presentation = false;
  bool user_adaptable_syntax = false;
  bool machine_interpretable = false;
  bool logic_interpretation = false;
  int human_readability_rank = 0;
  // Drawn from ExpressivenessFlags().
  std::set<std::string> expressiveness_flags;
};

// numerical-quantifiers, shortcut-constructs, ontological-primitives,
// first-order-referable-nodes.
const std::vector<std::string>& ExpressivenessFlags();
// The six boolean fields, human_readability, then the four expressiveness
// flags: the criteria format_score weights.
const std::vector<std::string>& FormatCriteria();

class FormatProfileTable {
 public:
  // Throws kConfiguration on a second profile for the same format.
  void Add(FormatProfile profile);
  // Throws kUnknownFormat when `format` has no profile.
  const FormatProfile& Get(FormatId format) const;
  bool Contains(FormatId format) const { return profiles_.contains(format); }
  int max_rank() const;
  const std::map<FormatId, FormatProfile>& profiles() const { return profiles_; }

 private:
  std::map<FormatId, FormatProfile> profiles_;
};

// Shipped defaults for ntriples, nquads, turtle and rdfxml, with readability
// ranks turtle 4 > ntriples 3 > nquads 2 > rdfxml 1.
const FormatProfileTable& DefaultProfileTable();
// {"profiles": [{"format": "turtle", "is_standard": true, ...,
//   "human_readability_rank": 4, "expressiveness_flags": [...]}]}.
// Throws kConfiguration on malformed input.
FormatProfileTable ParseProfileTable(std::string_view json);

// One criterion of a profile mapped to [0, 1]; human_readability is
// rank / max_rank. Throws kConfiguration for an unknown criterion.
double CriterionValue(const FormatProfile& profile, const FormatProfileTable& table,
                      std::string_view criterion);

using CriterionWeights = std::map<std::string, double>;

// Weighted mean of the criteria; criteria absent from `weights` weigh 1
// unless `weights` is non-empty, in which case absent criteria weigh 0.
// Throws kUnknownFormat, and kConfiguration on negative weights or a zero
// weight sum.
double FormatScore(FormatId format, const FormatProfileTable& table,
                   const CriterionWeights& weights = {});
MetricResult FormatScoreResult(FormatId format, const FormatProfileTable& table,
                               const CriterionWeights& weights = {});
MetricResult FormatProfileResult(FormatId format, const FormatProfileTable& table,
                                 std::string_view criterion);

// triple_count / byte_count. Throws kEmptyTarget on zero bytes.
double Concision(const SerializationStats& stats);
MetricResult ConcisionResult(const SerializationStats& stats);

struct SerializationRow {
  FormatId format = FormatId::kUnknown;
  bool available = false;
  std::size_t byte_count = 0;
  std::size_t triple_count = 0;
  std::optional<double> concision;
  std::string note;
};

// Serializes `dataset` in each format the toolkit can write; other formats
// use `external_bytes` when supplied and are marked unavailable otherwise.
std::vector<SerializationRow> CompareSerializations(
    const Dataset& dataset, const std::vector<FormatId>& formats,
    const std::map<FormatId, std::size_t>& external_bytes = {});

}  // namespace ldq

#endif  // LDQ_METRICS_MEDIUM_H_
