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

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "ldq/app/assess.h"

namespace ldq {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kReportVersion = "1";

Json OptionalScore(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::string_view SeverityName(Severity s) { return s == Severity::kError ? "error" : "warning"; }

Json ResultJson(const MetricResult& r) {
  Json j;
  j["kind"] = ResultKindName(r.kind);
  j["value"] = r.value;
  j["universe"] = OptionalScore(r.universe);
  j["target"] = r.target;
  j["mode"] = r.mode;
  j["components"] = Json::object();
  for (const auto& [k, v] : r.components) j["components"][k] = v;
  j["members"] = r.members;
  j["evidence_count"] = r.evidence_count;
  j["evidence"] = r.evidence;
  j["diagnostics"] = r.diagnostics;
  return j;
}

Json InputJson(const LoadedInput& in) {
  Json j;
  j["path"] = in.path;
  j["format"] = FormatName(in.format);
  j["sha256"] = in.sha256;
  j["bytes"] = in.byte_count;
  j["statements"] = in.statement_count;
  j["errors"] = in.error_count();
  j["diagnostics"] = Json::array();
  for (const ParseDiagnostic& d : in.diagnostics) {
    j["diagnostics"].push_back({{"severity", SeverityName(d.severity)},
                                {"line", d.line},
                                {"column", d.column},
                                {"code", d.code},
                                {"message", d.message}});
  }
  return j;
}

Json BranchJson(const AssessmentTree& tree, std::string_view id) {
  const AssessedNode& node = tree.Get(id);
  return {{"id", node.id}, {"status", NodeStatusName(node.status)}, {"score", OptionalScore(node.score)}};
}

std::string FormatScore(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

bool Visible(NodeStatus s, bool show_all) {
  return show_all || s == NodeStatus::kMeasured || s == NodeStatus::kAggregated;
}

void RenderNode(const Assessment& a, const TaxonomyGraph& taxonomy, const std::string& id,
                int depth, bool show_all, std::ostringstream& out) {
  const AssessedNode& node = a.tree.Get(id);
  if (Visible(node.status, show_all)) {
    out << std::string(2 * depth, ' ') << id << "  " << FormatScore(node.score) << "  "
        << NodeStatusName(node.status);
    std::size_t evidence = 0;
    for (const MetricResult& r : node.results) evidence += r.evidence_count;
    if (evidence > 0) out << "  evidence=" << evidence;
    if (!node.diagnostics.empty() && !node.score) out << "  (" << node.diagnostics.front() << ")";
    out << '\n';
  }
  for (const std::string& child : taxonomy.Children(id)) {
    RenderNode(a, taxonomy, child, depth + 1, show_all, out);
  }
}

}  // namespace

std::string ReportJson(const Assessment& a, const TaxonomyGraph& taxonomy) {
  Json j;
  j["report_version"] = kReportVersion;
  j["tool"] = {{"name", "ldq"}, {"version", ToolVersion()}};
  j["taxonomy_version"] = taxonomy.version();
  j["profile"] = a.profile.name;
  j["inputs"] = Json::array();
  for (const LoadedInput& in : a.context->inputs) j["inputs"].push_back(InputJson(in));
  j["summary"] = {{"quality", BranchJson(a.tree, TaxonomyGraph::kRoot)},
                  {"content", BranchJson(a.tree, TaxonomyGraph::kContentBranch)},
                  {"medium", BranchJson(a.tree, TaxonomyGraph::kMediumBranch)},
                  {"container", BranchJson(a.tree, TaxonomyGraph::kContainerBranch)}};
  j["nodes"] = Json::array();
  for (const AssessedNode& node : a.tree.nodes()) {
    const MetricCategory& c = taxonomy.Get(node.id);
    Json n;
    n["id"] = node.id;
    n["label"] = c.label;
    n["source"] = SourceName(c.source);
    n["path"] = TaxonomyPath(taxonomy, node.id);
    n["status"] = NodeStatusName(node.status);
    n["score"] = OptionalScore(node.score);
    n["own_score"] = OptionalScore(node.own_score);
    std::size_t evidence = 0;
    for (const MetricResult& r : node.results) evidence += r.evidence_count;
    n["evidence_count"] = evidence;
    n["results"] = Json::array();
    for (const MetricResult& r : node.results) n["results"].push_back(ResultJson(r));
    n["contributions"] = Json::array();
    for (const Contribution& part : node.contributions) {
      n["contributions"].push_back(
          {{"source", part.source}, {"weight", part.weight}, {"score", part.score}});
    }
    n["diagnostics"] = node.diagnostics;
    j["nodes"].push_back(std::move(n));
  }
  return j.dump(2) + "\n";
}

std::string ReportText(const Assessment& a, const TaxonomyGraph& taxonomy, bool show_all) {
  std::ostringstream out;
  out << "ldq " << ToolVersion() << "  taxonomy " << taxonomy.version() << "  profile "
      << a.profile.name << '\n';
  for (const LoadedInput& in : a.context->inputs) {
    out << "input " << in.path << "  " << FormatName(in.format) << "  " << in.statement_count
        << " statements  " << in.error_count() << " errors  sha256 " << in.sha256 << '\n';
    for (const ParseDiagnostic& d : in.diagnostics) {
      out << "  " << in.path << ':' << FormatDiagnostic(d) << '\n';
    }
  }
  out << "content " << FormatScore(a.tree.ScoreOf(TaxonomyGraph::kContentBranch)) << "  medium "
      << FormatScore(a.tree.ScoreOf(TaxonomyGraph::kMediumBranch)) << "  container "
      << FormatScore(a.tree.ScoreOf(TaxonomyGraph::kContainerBranch)) << "\n\n";
  RenderNode(a, taxonomy, std::string(TaxonomyGraph::kRoot), 0, show_all, out);
  return out.str();
}

}  // namespace ldq
