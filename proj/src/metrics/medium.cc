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

#include "ldq/metrics/medium.h"

#include <algorithm>

#include "json.hpp"
#include "ldq/error.h"

namespace ldq {
namespace {

constexpr const char* kBooleanCriteria[] = {
    "is_standard",           "is_structured",          "separates_structure_from_presentation",
    "user_adaptable_syntax", "machine_interpretable", "logic_interpretation",
};

bool* BooleanField(FormatProfile& p, std::string_view name) {
  if (name == "is_standard") return &p.is_standard;
  if (name == "is_structured") return &p.is_structured;
  if (name == "separates_structure_from_presentation") {
    return &p.separates_structure_from_presentation;
  }
  if (name == "user_adaptable_syntax") return &p.user_adaptable_syntax;
  if (name == "machine_interpretable") return &p.machine_interpretable;
  if (name == "logic_interpretation") return &p.logic_interpretation;
  return nullptr;
}

bool BooleanValue(const FormatProfile& p, std::string_view name) {
  return *BooleanField(const_cast<FormatProfile&>(p), name);
}

FormatProfile Profile(FormatId format, int rank, std::set<std::string> flags) {
  FormatProfile p;
  p.format = format;
  p.is_standard = true;
  p.is_structured = true;
  p.separates_structure_from_presentation = true;
  p.user_adaptable_syntax = false;
  p.machine_interpretable = true;
  p.logic_interpretation = true;
  p.human_readability_rank = rank;
  p.expressiveness_flags = std::move(flags);
  return p;
}

}  // namespace

const std::vector<std::string>& ExpressivenessFlags() {
  static const std::vector<std::string> kFlags = {
      "numerical-quantifiers", "shortcut-constructs", "ontological-primitives",
      "first-order-referable-nodes"};
  return kFlags;
}

const std::vector<std::string>& FormatCriteria() {
  static const std::vector<std::string> kCriteria = [] {
    std::vector<std::string> out(std::begin(kBooleanCriteria), std::end(kBooleanCriteria));
    out.emplace_back("human_readability");
    for (const std::string& f : ExpressivenessFlags()) out.push_back(f);
    return out;
  }();
  return kCriteria;
}

void FormatProfileTable::Add(FormatProfile profile) {
  if (profiles_.contains(profile.format)) {
    throw Error(ErrorCode::kConfiguration,
                "duplicate format profile for " + std::string(FormatName(profile.format)));
  }
  profiles_.emplace(profile.format, std::move(profile));
}

const FormatProfile& FormatProfileTable::Get(FormatId format) const {
  auto it = profiles_.find(format);
  if (it == profiles_.end()) {
    throw Error(ErrorCode::kUnknownFormat,
                "no format profile for " + std::string(FormatName(format)));
  }
  return it->second;
}

int FormatProfileTable::max_rank() const {
  int best = 0;
  for (const auto& [id, p] : profiles_) best = std::max(best, p.human_readability_rank);
  return best;
}

const FormatProfileTable& DefaultProfileTable() {
  static const FormatProfileTable kTable = [] {
    FormatProfileTable t;
    t.Add(Profile(FormatId::kTurtle, 4, {"shortcut-constructs"}));
    t.Add(Profile(FormatId::kNTriples, 3, {}));
    t.Add(Profile(FormatId::kNQuads, 2, {"first-order-referable-nodes"}));
    t.Add(Profile(FormatId::kRdfXmlUnsupported, 1, {}));
    return t;
  }();
  return kTable;
}

FormatProfileTable ParseProfileTable(std::string_view text) {
  FormatProfileTable table;
  try {
    auto doc = nlohmann::json::parse(text);
    for (const auto& entry : doc.at("profiles")) {
      auto format = ParseFormatName(entry.at("format").get<std::string>());
      if (!format || *format == FormatId::kUnknown) {
        throw Error(ErrorCode::kConfiguration,
                    "format profile names unknown format " + entry.at("format").dump());
      }
      FormatProfile p;
      p.format = *format;
      for (const char* name : kBooleanCriteria) *BooleanField(p, name) = entry.value(name, false);
      p.human_readability_rank = entry.value("human_readability_rank", 0);
      for (const auto& flag : entry.value("expressiveness_flags", nlohmann::json::array())) {
        std::string f = flag.get<std::string>();
        const auto& known = ExpressivenessFlags();
        if (std::find(known.begin(), known.end(), f) == known.end()) {
          throw Error(ErrorCode::kConfiguration, "unknown expressiveness flag " + f);
        }
        p.expressiveness_flags.insert(std::move(f));
      }
      table.Add(std::move(p));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfiguration, std::string("format profile table: ") + e.what());
  }
  return table;
}

double CriterionValue(const FormatProfile& profile, const FormatProfileTable& table,
                      std::string_view criterion) {
  if (criterion == "human_readability") {
    int max_rank = table.max_rank();
    return max_rank <= 0 ? 0.0
                         : static_cast<double>(profile.human_readability_rank) / max_rank;
  }
  if (BooleanField(const_cast<FormatProfile&>(profile), criterion)) {
    return BooleanValue(profile, criterion) ? 1.0 : 0.0;
  }
  const auto& flags = ExpressivenessFlags();
  if (std::find(flags.begin(), flags.end(), criterion) != flags.end()) {
    return profile.expressiveness_flags.contains(std::string(criterion)) ? 1.0 : 0.0;
  }
  throw Error(ErrorCode::kConfiguration, "unknown format criterion " + std::string(criterion));
}

double FormatScore(FormatId format, const FormatProfileTable& table,
                   const CriterionWeights& weights) {
  const FormatProfile& profile = table.Get(format);
  for (const auto& [name, w] : weights) {
    const auto& criteria = FormatCriteria();
    if (std::find(criteria.begin(), criteria.end(), name) == criteria.end()) {
      throw Error(ErrorCode::kConfiguration, "unknown format criterion " + name);
    }
    if (w < 0) throw Error(ErrorCode::kConfiguration, "negative weight for " + name);
  }
  double sum = 0.0;
  double weight_sum = 0.0;
  for (const std::string& criterion : FormatCriteria()) {
    double w = 1.0;
    if (!weights.empty()) {
      auto it = weights.find(criterion);
      w = it == weights.end() ? 0.0 : it->second;
    }
    sum += w * CriterionValue(profile, table, criterion);
    weight_sum += w;
  }
  if (weight_sum <= 0.0) throw Error(ErrorCode::kConfiguration, "format criterion weights sum to 0");
  return sum / weight_sum;
}

MetricResult FormatScoreResult(FormatId format, const FormatProfileTable& table,
                               const CriterionWeights& weights) {
  MetricResult r = MetricResult::Score(FormatScore(format, table, weights));
  const FormatProfile& profile = table.Get(format);
  for (const std::string& c : FormatCriteria()) r.components[c] = CriterionValue(profile, table, c);
  r.target = std::string(FormatName(format));
  r.mode = "static format profile";
  return r;
}

MetricResult FormatProfileResult(FormatId format, const FormatProfileTable& table,
                                 std::string_view criterion) {
  const FormatProfile& profile = table.Get(format);
  double value = CriterionValue(profile, table, criterion);
  MetricResult r;
  if (criterion == "human_readability") {
    r = MetricResult::Score(value);
    r.components["rank"] = profile.human_readability_rank;
    r.components["max_rank"] = table.max_rank();
  } else {
    r = MetricResult::Boolean(value == 1.0);
  }
  r.target = std::string(FormatName(format));
  r.mode = "static format profile";
  return r;
}

double Concision(const SerializationStats& stats) {
  if (stats.byte_count == 0) throw Error(ErrorCode::kEmptyTarget, "no bytes to measure concision");
  return static_cast<double>(stats.triple_count) / static_cast<double>(stats.byte_count);
}

MetricResult ConcisionResult(const SerializationStats& stats) {
  MetricResult r = MetricResult::Score(Concision(stats));
  r.kind = ResultKind::kRatio;
  r.components["byte_count"] = static_cast<double>(stats.byte_count);
  r.components["triple_count"] = static_cast<double>(stats.triple_count);
  r.target = std::string(FormatName(stats.format));
  return r;
}

std::vector<SerializationRow> CompareSerializations(
    const Dataset& dataset, const std::vector<FormatId>& formats,
    const std::map<FormatId, std::size_t>& external_bytes) {
  std::vector<SerializationRow> rows;
  for (FormatId format : formats) {
    SerializationRow row;
    row.format = format;
    row.triple_count = dataset.statement_count();
    bool writable = format == FormatId::kNQuads ||
                    (format == FormatId::kNTriples && dataset.named_graphs.empty());
    if (writable) {
      row.byte_count = Serialize(dataset, format).size();
      row.available = true;
    } else if (auto it = external_bytes.find(format); it != external_bytes.end()) {
      row.byte_count = it->second;
      row.available = true;
      row.note = "externally supplied byte count";
    } else {
      row.triple_count = 0;
      row.note = "no serializer for this format";
    }
    if (row.available && row.byte_count > 0) {
      row.concision = static_cast<double>(row.triple_count) / static_cast<double>(row.byte_count);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ldq
