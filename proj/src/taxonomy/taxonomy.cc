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

#include "ldq/taxonomy/taxonomy.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "ldq/error.h"
#include "json.hpp"

namespace ldq {
namespace {

constexpr std::pair<std::string_view, Source> kPrefixes[] = {
    {"pm:", Source::kPm},     {"LD:", Source::kLD},   {"PD:", Source::kPD},
    {"SF:", Source::kSF},     {"Kahn:", Source::kKahn}, {"LDpattern:", Source::kLDpattern},
    {"ODP:", Source::kODP},
};

std::string NormalizeId(std::string_view id) {
  std::string out;
  bool in_space = false;
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += '_';
    in_space = false;
    out += c;
  }
  return out;
}

bool HasKnownPrefix(std::string_view id) {
  return std::any_of(std::begin(kPrefixes), std::end(kPrefixes),
                     [&](const auto& p) { return id.starts_with(p.first); });
}

std::pair<std::string, std::string> SplitPrefix(std::string_view id) {
  for (const auto& [prefix, source] : kPrefixes) {
    if (id.starts_with(prefix)) return {std::string(prefix), std::string(id.substr(prefix.size()))};
  }
  return {"", std::string(id)};
}

}  // namespace

std::string_view SourceName(Source source) {
  switch (source) {
    case Source::kPm: return "pm";
    case Source::kLD: return "LD";
    case Source::kPD: return "PD";
    case Source::kSF: return "SF";
    case Source::kKahn: return "Kahn";
    case Source::kLDpattern: return "LDpattern";
    case Source::kODP: return "ODP";
  }
  return "pm";
}

std::string_view CategoryKindName(CategoryKind kind) {
  switch (kind) {
    case CategoryKind::kFunctionType: return "function-type";
    case CategoryKind::kPattern: return "pattern";
    case CategoryKind::kDimension: return "dimension";
  }
  return "function-type";
}

std::string_view ViewKindName(ViewKind kind) {
  return kind == ViewKind::kRelation ? "relation" : "concept";
}

Source SourceOfId(std::string_view id) {
  for (const auto& [prefix, source] : kPrefixes) {
    if (id.starts_with(prefix)) return source;
  }
  return Source::kPm;
}

void TaxonomyGraph::Add(MetricCategory category) {
  if (nodes_.contains(category.id)) {
    throw Error(ErrorCode::kStructural, "duplicate category id " + category.id);
  }
  for (const std::string& parent : category.parents) children_[parent].push_back(category.id);
  order_.push_back(category.id);
  std::string id = category.id;
  nodes_.emplace(std::move(id), std::move(category));
}

void TaxonomyGraph::AddAlias(std::string alias, std::string canonical) {
  aliases_[std::move(alias)] = std::move(canonical);
}

void TaxonomyGraph::AddView(DerivedView view) {
  if (views_.contains(view.derived_id) || nodes_.contains(view.derived_id)) {
    throw Error(ErrorCode::kDerivation, "derived id " + view.derived_id + " is already taken");
  }
  std::string id = view.derived_id;
  views_.emplace(std::move(id), std::move(view));
}

std::optional<std::string> TaxonomyGraph::TryResolve(std::string_view raw) const {
  std::string id = NormalizeId(raw);
  if (!HasKnownPrefix(id)) id = "pm:" + id;
  if (nodes_.contains(id)) return id;
  if (auto it = aliases_.find(id); it != aliases_.end()) {
    // Alias chains are not built in, but resolve them if a caller adds one.
    std::string target = it->second;
    for (int hops = 0; hops < 16 && !nodes_.contains(target); ++hops) {
      auto next = aliases_.find(target);
      if (next == aliases_.end()) return std::nullopt;
      target = next->second;
    }
    if (nodes_.contains(target)) return target;
  }
  return std::nullopt;
}

std::string TaxonomyGraph::Resolve(std::string_view id) const {
  if (auto resolved = TryResolve(id)) return *resolved;
  throw Error(ErrorCode::kUnknownCategory, "unknown category " + std::string(id));
}

const MetricCategory& TaxonomyGraph::Get(std::string_view id) const {
  return nodes_.find(Resolve(id))->second;
}

const MetricCategory* TaxonomyGraph::Find(std::string_view canonical_id) const {
  auto it = nodes_.find(canonical_id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const DerivedView* TaxonomyGraph::FindView(std::string_view derived_id) const {
  auto it = views_.find(derived_id);
  return it == views_.end() ? nullptr : &it->second;
}

const std::vector<std::string>& TaxonomyGraph::Children(std::string_view id) const {
  static const std::vector<std::string> kNone;
  auto it = children_.find(id);
  return it == children_.end() ? kNone : it->second;
}

std::set<std::string> TaxonomyGraph::Descendants(std::string_view id) const {
  std::set<std::string> seen{std::string(id)};
  std::vector<std::string> stack{std::string(id)};
  while (!stack.empty()) {
    std::string current = std::move(stack.back());
    stack.pop_back();
    for (const std::string& child : Children(current)) {
      if (seen.insert(child).second) stack.push_back(child);
    }
  }
  return seen;
}

std::set<std::string> TaxonomyGraph::Ancestors(std::string_view id) const {
  std::set<std::string> seen{std::string(id)};
  std::vector<std::string> stack{std::string(id)};
  while (!stack.empty()) {
    std::string current = std::move(stack.back());
    stack.pop_back();
    const MetricCategory* node = Find(current);
    if (!node) continue;
    for (const std::string& parent : node->parents) {
      if (seen.insert(parent).second) stack.push_back(parent);
    }
  }
  return seen;
}

bool TaxonomyGraph::IsSubtype(std::string_view a, std::string_view b) const {
  std::string from = Resolve(a);
  std::string to = Resolve(b);
  return Ancestors(from).contains(to);
}

std::vector<TaxonomyDiagnostic> Validate(const TaxonomyGraph& graph,
                                         const std::set<std::string>& operations) {
  std::vector<TaxonomyDiagnostic> out;
  const std::string root(TaxonomyGraph::kRoot);

  for (const std::string& id : graph.ids()) {
    const MetricCategory& node = *graph.Find(id);
    for (const std::string& parent : node.parents) {
      if (!graph.Find(parent)) {
        out.push_back({"parent", id + " names unknown parent " + parent, {id, parent}});
      }
    }
    if (node.parents.empty() && id != root) {
      out.push_back({"root", id + " has no parent but is not " + root, {id}});
    }
    if (node.evaluator && !operations.contains(node.evaluator->operation)) {
      out.push_back({"evaluator", id + " binds unknown operation " + node.evaluator->operation,
                     {id}});
    }
    if (node.evaluator) {
      for (const std::string& aux : node.evaluator->auxiliary) {
        if (!operations.contains(aux)) {
          out.push_back({"evaluator", id + " binds unknown auxiliary operation " + aux, {id}});
        }
      }
    }
  }
  if (!graph.Find(root)) out.push_back({"root", "missing root " + root, {root}});
  else if (!graph.Find(root)->parents.empty()) {
    out.push_back({"root", root + " must not have parents", {root}});
  }

  // Cycle detection by colored DFS; each cycle is reported once by its path.
  enum Color { kWhite, kGray, kBlack };
  std::map<std::string, Color> color;
  std::vector<std::string> path;
  std::set<std::set<std::string>> reported;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    color[id] = kGray;
    path.push_back(id);
    const MetricCategory* node = graph.Find(id);
    if (node) {
      for (const std::string& parent : node->parents) {
        if (!graph.Find(parent)) continue;
        Color c = color[parent];
        if (c == kGray) {
          auto start = std::find(path.begin(), path.end(), parent);
          std::vector<std::string> cycle(start, path.end());
          std::set<std::string> key(cycle.begin(), cycle.end());
          if (reported.insert(key).second) {
            std::string names;
            for (const std::string& n : cycle) names += (names.empty() ? "" : " -> ") + n;
            out.push_back({"cycle", "parent cycle: " + names + " -> " + parent, cycle});
          }
        } else if (c == kWhite) {
          visit(parent);
        }
      }
    }
    path.pop_back();
    color[id] = kBlack;
  };
  for (const std::string& id : graph.ids()) {
    if (color[id] == kWhite) visit(id);
  }

  const std::string branches[] = {std::string(TaxonomyGraph::kContentBranch),
                                  std::string(TaxonomyGraph::kMediumBranch),
                                  std::string(TaxonomyGraph::kContainerBranch)};
  for (const std::string& id : graph.ids()) {
    std::set<std::string> ancestors = graph.Ancestors(id);
    std::vector<std::string> hit;
    for (const std::string& b : branches) {
      if (ancestors.contains(b)) hit.push_back(b);
    }
    if (hit.size() > 1) {
      std::string names;
      for (const std::string& h : hit) names += (names.empty() ? "" : " and ") + h;
      hit.insert(hit.begin(), id);
      out.push_back({"partition", id + " descends from both " + names, hit});
    }
  }

  for (const auto& [alias, canonical] : graph.aliases()) {
    if (!graph.Find(canonical)) {
      out.push_back({"alias", alias + " points at unknown " + canonical, {alias, canonical}});
    }
    if (graph.Find(alias)) {
      out.push_back({"alias", alias + " is both an alias and a category", {alias}});
    }
  }
  return out;
}

namespace {

std::optional<std::string> Adjective(std::string_view quality) {
  static const std::map<std::string, std::string, std::less<>> kAdjectives = {
      {"consistency", "consistent"}, {"non-redundancy", "non-redundant"},
      {"conformity", "conform"},     {"correctness", "correct"},
      {"validity", "valid"},         {"completeness", "complete"},
  };
  std::string out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = quality.find("_and_", pos);
    std::string_view part = quality.substr(pos, next == std::string_view::npos ? next : next - pos);
    auto it = kAdjectives.find(part);
    if (it == kAdjectives.end()) return std::nullopt;
    out += it->second;
    if (next == std::string_view::npos) break;
    out += "_and_";
    pos = next + 5;
  }
  return out;
}

}  // namespace

DerivedView DeriveView(const TaxonomyGraph& graph, std::string_view origin, ViewKind kind) {
  const MetricCategory& node = graph.Get(origin);
  const bool boolean = node.result_kind == ResultKind::kBoolean;
  if (kind == ViewKind::kRelation && !boolean) {
    throw Error(ErrorCode::kDerivation,
                "relation views derive only from boolean functions; " + node.id + " returns " +
                    std::string(ResultKindName(node.result_kind)));
  }
  auto [prefix, local] = SplitPrefix(node.id);
  std::string name;
  if (kind == ViewKind::kConcept && !boolean) {
    name = "Object_measured_by_" + local;
  } else {
    std::size_t of = local.find("_of_this_");
    std::optional<std::string> adjective;
    if (of != std::string::npos) adjective = Adjective(std::string_view(local).substr(0, of));
    if (adjective) {
      std::string rest = local.substr(of + 9);
      std::size_t wrt = rest.find("_wrt_this_");
      if (wrt != std::string::npos) {
        std::string other = rest.substr(wrt + 10);
        std::string with = kind == ViewKind::kConcept && other == "one"
                               ? "_with_any_other_one_in_the_KB"
                               : "_with_this_" + other;
        name = rest.substr(0, wrt) + "_" + *adjective + with;
      } else {
        name = rest + "_" + *adjective;
      }
    } else {
      name = "has_" + local;
    }
    if (kind == ViewKind::kConcept) {
      name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    }
  }
  return DerivedView{node.id, kind, (prefix.empty() ? std::string("pm:") : prefix) + name};
}

std::string RenderTree(const TaxonomyGraph& graph, std::string_view root,
                       std::optional<int> depth) {
  std::string start = graph.Resolve(root);
  std::ostringstream out;
  std::function<void(const std::string&, int)> walk = [&](const std::string& id, int level) {
    const MetricCategory& node = *graph.Find(id);
    out << std::string(static_cast<std::size_t>(level) * 2, ' ') << id << "  ["
        << SourceName(node.source) << ", " << ResultKindName(node.result_kind);
    if (node.evaluator) {
      out << ", evaluator: " << node.evaluator->operation;
      if (!node.evaluator->parameter.empty()) out << "/" << node.evaluator->parameter;
      if (node.evaluator->requires_arguments) out << " (needs arguments)";
    }
    if (node.provisional) out << ", provisional";
    out << "]\n";
    if (depth && level >= *depth) return;
    for (const std::string& child : graph.Children(id)) walk(child, level + 1);
  };
  walk(start, 0);
  return out.str();
}

std::string ExportJson(const TaxonomyGraph& graph) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["version"] = graph.version();
  ordered_json nodes = ordered_json::array();
  for (const std::string& id : graph.ids()) {
    const MetricCategory& n = *graph.Find(id);
    ordered_json j;
    j["id"] = n.id;
    j["label"] = n.label;
    j["parents"] = n.parents;
    j["source"] = SourceName(n.source);
    j["kind"] = CategoryKindName(n.kind);
    j["result_kind"] = ResultKindName(n.result_kind);
    j["signature"] = n.signature;
    j["note"] = n.note;
    j["provisional"] = n.provisional;
    if (n.evaluator) {
      j["evaluator"] = {{"operation", n.evaluator->operation},
                        {"parameter", n.evaluator->parameter},
                        {"requires_arguments", n.evaluator->requires_arguments},
                        {"auxiliary", n.evaluator->auxiliary}};
    } else {
      j["evaluator"] = nullptr;
    }
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  ordered_json aliases = ordered_json::object();
  for (const auto& [alias, canonical] : graph.aliases()) aliases[alias] = canonical;
  doc["aliases"] = std::move(aliases);
  ordered_json views = ordered_json::array();
  for (const auto& [id, view] : graph.views()) {
    views.push_back({{"id", id}, {"origin", view.origin}, {"kind", ViewKindName(view.kind)}});
  }
  doc["views"] = std::move(views);
  return doc.dump(2) + "\n";
}

}  // namespace ldq
