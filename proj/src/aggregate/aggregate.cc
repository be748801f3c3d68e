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

#include "ldq/aggregate/aggregate.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "json.hpp"
#include "ldq/error.h"

namespace ldq {
namespace {

using nlohmann::json;

Direction ParseDirection(const std::string& s) {
  if (s == "higher-better") return Direction::kHigherBetter;
  if (s == "lower-better") return Direction::kLowerBetter;
  throw Error(ErrorCode::kConfiguration, "unknown normalizer direction " + s);
}

Combinator ParseCombinator(const std::string& s) {
  if (s == "mean") return Combinator::kMean;
  if (s == "min") return Combinator::kMin;
  if (s == "geomean") return Combinator::kGeomean;
  throw Error(ErrorCode::kConfiguration, "unknown combinator " + s);
}

template <typename T>
T LookupOr(const std::map<std::string, T>& m, std::string_view key, T fallback) {
  auto it = m.find(std::string(key));
  return it == m.end() ? fallback : it->second;
}

double Clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double AgainstTarget(double value, const Normalizer& n) {
  if (n.direction == Direction::kHigherBetter) return Clamp01(value / n.target);
  if (value <= 0.0) return 1.0;
  return Clamp01(n.target / value);
}

// Contributions with positive weight only.
double Combine(const std::vector<Contribution>& parts, Combinator combinator) {
  double weight_sum = 0.0;
  for (const Contribution& c : parts) weight_sum += c.weight;
  switch (combinator) {
    case Combinator::kMin: {
      double best = 1.0;
      for (const Contribution& c : parts) best = std::min(best, c.score);
      return best;
    }
    case Combinator::kGeomean: {
      double log_sum = 0.0;
      for (const Contribution& c : parts) {
        if (c.score <= 0.0) return 0.0;
        log_sum += c.weight * std::log(c.score);
      }
      return Clamp01(std::exp(log_sum / weight_sum));
    }
    case Combinator::kMean:
      break;
  }
  double sum = 0.0;
  for (const Contribution& c : parts) sum += c.weight * c.score;
  return Clamp01(sum / weight_sum);
}

}  // namespace

std::string_view DirectionName(Direction d) {
  return d == Direction::kHigherBetter ? "higher-better" : "lower-better";
}

std::string_view CombinatorName(Combinator c) {
  switch (c) {
    case Combinator::kMean: return "mean";
    case Combinator::kMin: return "min";
    case Combinator::kGeomean: return "geomean";
  }
  return "mean";
}

std::string_view NodeStatusName(NodeStatus status) {
  switch (status) {
    case NodeStatus::kMeasured: return "measured";
    case NodeStatus::kAggregated: return "aggregated";
    case NodeStatus::kDeclaredOnly: return "declared-only";
    case NodeStatus::kUnassessed: return "unassessed";
    case NodeStatus::kError: return "error";
    case NodeStatus::kDisabled: return "disabled";
  }
  return "unassessed";
}

double Profile::WeightOf(std::string_view id) const { return LookupOr(weights, id, 1.0); }
double Profile::SelfWeightOf(std::string_view id) const { return LookupOr(self_weights, id, 1.0); }
Combinator Profile::CombinatorOf(std::string_view id) const {
  return LookupOr(combinators, id, Combinator::kMean);
}
bool Profile::IsEnabled(std::string_view id) const { return !disabled.contains(std::string(id)); }

Profile ParseProfile(std::string_view text, const TaxonomyGraph& taxonomy) {
  Profile p;
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw Error(ErrorCode::kConfiguration, "profile must be a JSON object");
    p.name = doc.value("name", "");
    auto id = [&](const std::string& raw) { return taxonomy.Resolve(raw); };
    // Members are copied out so the iterated objects outlive their loops.
    auto member = [&](const char* key, json fallback) {
      return doc.contains(key) ? doc.at(key) : fallback;
    };
    const json weights = member("weights", json::object());
    const json disabled = member("disabled", json::array());
    const json enabled = member("enabled", json::array());
    const json normalizers = member("normalizers", json::object());
    const json combinators = member("combinator", json::object());
    const json self_weights = member("self_weights", json::object());
    for (const auto& [k, v] : weights.items()) {
      p.weights[id(k)] = v.get<double>();
    }
    for (const auto& v : disabled) p.disabled.insert(id(v.get<std::string>()));
    for (const auto& v : enabled) p.enabled.insert(id(v.get<std::string>()));
    for (const auto& [k, v] : normalizers.items()) {
      Normalizer n;
      n.target = v.value("target", 1.0);
      n.direction = ParseDirection(v.value("direction", "higher-better"));
      p.normalizers[id(k)] = n;
    }
    for (const auto& [k, v] : combinators.items()) {
      p.combinators[id(k)] = ParseCombinator(v.get<std::string>());
    }
    for (const auto& [k, v] : self_weights.items()) {
      p.self_weights[id(k)] = v.get<double>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfiguration, std::string("profile: ") + e.what());
  }
  ValidateProfile(p, taxonomy);
  return p;
}

std::string ProfileToJson(const Profile& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name;
  j["weights"] = p.weights;
  j["disabled"] = p.disabled;
  j["enabled"] = p.enabled;
  nlohmann::ordered_json normalizers = nlohmann::ordered_json::object();
  for (const auto& [id, n] : p.normalizers) {
    normalizers[id] = {{"target", n.target}, {"direction", DirectionName(n.direction)}};
  }
  j["normalizers"] = normalizers;
  nlohmann::ordered_json combinators = nlohmann::ordered_json::object();
  for (const auto& [id, c] : p.combinators) combinators[id] = CombinatorName(c);
  j["combinator"] = combinators;
  j["self_weights"] = p.self_weights;
  return j.dump(2);
}

void ValidateProfile(const Profile& p, const TaxonomyGraph& taxonomy) {
  for (const auto* weights : {&p.weights, &p.self_weights}) {
    for (const auto& [id, w] : *weights) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw Error(ErrorCode::kConfiguration, "weight of " + id + " must be nonnegative");
      }
    }
  }
  for (const auto& [id, n] : p.normalizers) {
    ResultKind kind = taxonomy.Get(id).result_kind;
    if (kind != ResultKind::kCount && kind != ResultKind::kDuration && kind != ResultKind::kSet) {
      throw Error(ErrorCode::kConfiguration,
                  "normalizer for " + id + " but its result kind is " +
                      std::string(ResultKindName(kind)));
    }
    if (!(n.target > 0.0) || !std::isfinite(n.target)) {
      throw Error(ErrorCode::kConfiguration, "normalizer target of " + id + " must be positive");
    }
  }
}

Profile MergeProfiles(const Profile& base, const Profile& o) {
  Profile out = base;
  if (!o.name.empty()) out.name = o.name;
  for (const auto& [k, v] : o.weights) out.weights[k] = v;
  for (const auto& [k, v] : o.normalizers) out.normalizers[k] = v;
  for (const auto& [k, v] : o.combinators) out.combinators[k] = v;
  for (const auto& [k, v] : o.self_weights) out.self_weights[k] = v;
  out.disabled.insert(o.disabled.begin(), o.disabled.end());
  for (const std::string& id : o.enabled) out.disabled.erase(id);
  for (const std::string& id : o.disabled) out.enabled.erase(id);
  out.enabled.insert(o.enabled.begin(), o.enabled.end());
  return out;
}

std::set<std::string> EnabledCategories(const Profile& profile, const TaxonomyGraph& taxonomy) {
  std::set<std::string> out;
  for (const auto& [id, node] : taxonomy.nodes()) {
    if (node.evaluator && !node.evaluator->requires_arguments && profile.IsEnabled(id)) {
      out.insert(id);
    }
  }
  return out;
}

double Normalize(const MetricResult& r, const Profile& profile) {
  auto normalizer = [&]() -> const Normalizer* {
    auto it = profile.normalizers.find(r.category_id);
    return it == profile.normalizers.end() ? nullptr : &it->second;
  };
  switch (r.kind) {
    case ResultKind::kBoolean:
      return r.value != 0.0 ? 1.0 : 0.0;
    case ResultKind::kRatio:
    case ResultKind::kScore:
      return Clamp01(r.value);
    case ResultKind::kCount:
    case ResultKind::kDuration: {
      const Normalizer* n = normalizer();
      if (n == nullptr) {
        throw Error(ErrorCode::kConfiguration,
                    "no normalizer for " + std::string(ResultKindName(r.kind)) + " result of " +
                        r.category_id);
      }
      return AgainstTarget(r.value, *n);
    }
    case ResultKind::kSet: {
      if (!r.universe) {
        throw Error(ErrorCode::kConfiguration, "set result of " + r.category_id + " has no universe");
      }
      double share = *r.universe > 0.0 ? Clamp01(r.value / *r.universe) : 0.0;
      const Normalizer* n = normalizer();
      bool lower = n != nullptr && n->direction == Direction::kLowerBetter;
      return lower ? 1.0 - share : share;
    }
    case ResultKind::kNone:
      break;
  }
  throw Error(ErrorCode::kConfiguration, "result of " + r.category_id + " has no value kind");
}

const AssessedNode& AssessmentTree::Get(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownCategory, "no assessed node " + std::string(id));
  }
  return nodes_[it->second];
}

AssessmentTree Aggregate(const TaxonomyGraph& taxonomy, const std::vector<MetricResult>& results,
                         const Profile& profile, const std::vector<NodeIssue>& issues) {
  AssessmentTree tree;
  for (const std::string& id : taxonomy.ids()) {
    tree.index_.emplace(id, tree.nodes_.size());
    AssessedNode node;
    node.id = id;
    tree.nodes_.push_back(std::move(node));
  }
  for (const MetricResult& r : results) {
    std::string id = taxonomy.Resolve(r.category_id);
    MetricResult copy = r;
    copy.category_id = id;
    tree.nodes_[tree.index_.at(id)].results.push_back(std::move(copy));
  }
  std::map<std::string, const NodeIssue*> issue_of;
  for (const NodeIssue& issue : issues) issue_of[taxonomy.Resolve(issue.id)] = &issue;

  std::vector<bool> done(tree.nodes_.size(), false);
  std::vector<bool> has_evaluator_below(tree.nodes_.size(), false);
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (done[i]) return;
    done[i] = true;
    AssessedNode& node = tree.nodes_[i];
    const MetricCategory& category = taxonomy.Get(node.id);
    bool evaluator_below = category.evaluator.has_value();
    std::vector<Contribution> parts;
    for (const std::string& child : taxonomy.Children(node.id)) {
      std::size_t c = tree.index_.at(child);
      visit(c);
      evaluator_below = evaluator_below || has_evaluator_below[c];
      const AssessedNode& child_node = tree.nodes_[c];
      double w = profile.WeightOf(child);
      if (child_node.score && w > 0.0) parts.push_back({child, w, *child_node.score});
    }
    has_evaluator_below[i] = evaluator_below;

    // Averaged in sorted order so result order cannot change the bits.
    std::vector<double> own;
    for (const MetricResult& r : node.results) {
      try {
        own.push_back(Normalize(r, profile));
      } catch (const Error& e) {
        node.diagnostics.push_back(e.what());
      }
      for (const std::string& d : r.diagnostics) node.diagnostics.push_back(d);
    }
    std::sort(own.begin(), own.end());
    if (!own.empty()) {
      double sum = 0.0;
      for (double v : own) sum += v;
      node.own_score = sum / static_cast<double>(own.size());
    }

    if (!profile.IsEnabled(node.id)) {
      node.status = NodeStatus::kDisabled;
      return;
    }
    auto issue = issue_of.find(node.id);
    if (issue != issue_of.end() && !node.own_score) {
      node.diagnostics.push_back(issue->second->message);
      if (issue->second->status == NodeStatus::kError) {
        node.status = NodeStatus::kError;
        return;
      }
    }
    if (!node.results.empty() && !node.own_score) {
      node.status = NodeStatus::kError;
      return;
    }
    if (node.own_score) {
      double self = profile.SelfWeightOf(node.id);
      if (self > 0.0 || parts.empty()) parts.push_back({node.id, parts.empty() ? 1.0 : self, *node.own_score});
    }
    std::sort(parts.begin(), parts.end(),
              [](const Contribution& a, const Contribution& b) { return a.source < b.source; });
    node.contributions = parts;
    if (!parts.empty()) {
      node.score = Combine(parts, profile.CombinatorOf(node.id));
      node.status = node.own_score ? NodeStatus::kMeasured : NodeStatus::kAggregated;
    } else {
      node.status = evaluator_below ? NodeStatus::kUnassessed : NodeStatus::kDeclaredOnly;
    }
  };
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) visit(i);
  return tree;
}

}  // namespace ldq
