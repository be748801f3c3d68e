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
#include <set>

#include "ldq/app/assess.h"
#include "ldq/error.h"

namespace ldq {
namespace {

using Results = std::vector<MetricResult>;

const ConflictAnalysis& Conflicts(const AssessmentContext& ctx) {
  if (!ctx.conflicts) throw Error(ErrorCode::kConfiguration, "conflict analysis not prepared");
  return *ctx.conflicts;
}

const ProbeLog& Log(const AssessmentContext& ctx) {
  if (!ctx.probe_log) throw Error(ErrorCode::kEmptyTarget, "probing disabled; enable it with --probe");
  return *ctx.probe_log;
}

std::set<FormatId> InputFormats(const AssessmentContext& ctx) {
  std::set<FormatId> out;
  for (const LoadedInput& in : ctx.inputs) out.insert(in.format);
  if (out.empty()) throw Error(ErrorCode::kEmptyTarget, "no inputs");
  return out;
}

Results One(MetricResult r) { return {std::move(r)}; }

Results SyntaxValidity(const AssessmentContext& ctx) {
  std::size_t errors = 0;
  std::vector<std::string> evidence;
  for (const LoadedInput& in : ctx.inputs) {
    for (const ParseDiagnostic& d : in.diagnostics) {
      if (d.severity != Severity::kError) continue;
      ++errors;
      evidence.push_back(in.path + ":" + FormatDiagnostic(d));
    }
  }
  MetricResult r = MetricResult::Boolean(errors == 0);
  for (std::string& e : evidence) r.AddEvidence(std::move(e));
  r.components["syntax_errors"] = static_cast<double>(errors);
  return One(std::move(r));
}

Results FormatProfiles(const AssessmentContext& ctx, const MetricCategory& c) {
  Results out;
  for (FormatId f : InputFormats(ctx)) {
    MetricResult r = FormatProfileResult(f, ctx.format_table, c.evaluator->parameter);
    r.target = std::string(FormatName(f));
    out.push_back(std::move(r));
  }
  return out;
}

Results FormatScores(const AssessmentContext& ctx) {
  Results out;
  for (FormatId f : InputFormats(ctx)) {
    MetricResult r = FormatScoreResult(f, ctx.format_table);
    r.target = std::string(FormatName(f));
    out.push_back(std::move(r));
  }
  return out;
}

Results ConcisionOfInputs(const AssessmentContext& ctx) {
  Results out;
  for (std::size_t i = 0; i < ctx.inputs.size(); ++i) {
    const LoadedInput& in = ctx.inputs[i];
    if (in.error_count() > 0) {
      throw Error(ErrorCode::kParse, in.path + " has syntax errors; concision needs a clean parse");
    }
    if (in.byte_count == 0) continue;
    MetricResult r = ConcisionResult({in.byte_count, in.statement_count, in.format});
    r.target = in.path;
    for (const SerializationRow& row : CompareSerializations(
             ctx.datasets[i], {FormatId::kNTriples, FormatId::kNQuads}, {})) {
      if (row.concision) {
        r.components[std::string(FormatName(row.format)) + "_concision"] = *row.concision;
      }
    }
    out.push_back(std::move(r));
  }
  if (out.empty()) throw Error(ErrorCode::kEmptyTarget, "every input is empty");
  return out;
}

Results UriQualityWithProbes(const AssessmentContext& ctx) {
  Results out = One(UriQuality(ctx.graph));
  out.back().mode = "static";
  if (ctx.probe_log && !ctx.probe_log->empty()) {
    MetricResult dynamic = DereferenceabilityOfLog(*ctx.probe_log);
    dynamic.mode = "dereferenceability";
    out.push_back(std::move(dynamic));
  }
  return out;
}

// Each input against the union of the others.
Results ConnectednessOfInputs(const AssessmentContext& ctx) {
  if (ctx.datasets.size() < 2) {
    throw Error(ErrorCode::kEmptyTarget, "connectedness needs at least two inputs");
  }
  Results out;
  std::optional<Error> last;
  for (std::size_t i = 0; i < ctx.datasets.size(); ++i) {
    Graph others;
    for (std::size_t j = 0; j < ctx.datasets.size(); ++j) {
      if (j == i) continue;
      for (const Triple& t : ctx.datasets[j].Union()) others.Insert(t);
    }
    try {
      MetricResult r = Connectedness(ctx.datasets[i].Union(), others);
      r.target = ctx.inputs[i].path;
      out.push_back(std::move(r));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyTarget) throw;
      last = e;
    }
  }
  if (out.empty()) throw *last;
  return out;
}

Results LdsOf(const AssessmentContext& ctx) {
  if (!ctx.schema.completeness_property) {
    throw Error(ErrorCode::kEmptyTarget, "no completeness property in the schema");
  }
  return One(LdsCompleteness(ctx.graph, *ctx.schema.completeness_property));
}

std::map<std::string, Evaluator> BuildRegistry() {
  std::map<std::string, Evaluator> m;
  auto add = [&](std::string op, Evaluator e) { m.emplace(std::move(op), std::move(e)); };
  // content
  add("conflicts", [](const AssessmentContext& x, const MetricCategory&) {
    return One(ConflictSet(Conflicts(x)));
  });
  add("kb_consistency", [](const AssessmentContext& x, const MetricCategory&) {
    return One(KbConsistency(Conflicts(x)));
  });
  add("consistency_ratio_all", [](const AssessmentContext& x, const MetricCategory&) {
    return One(ConsistencyRatioAll(Conflicts(x)));
  });
  add("pd_consistency", [](const AssessmentContext& x, const MetricCategory&) {
    return One(PdConsistency(Conflicts(x)));
  });
  add("coverage", [](const AssessmentContext& x, const MetricCategory&) {
    return One(Coverage(Conflicts(x).closure(), x.schema));
  });
  add("coherence", [](const AssessmentContext& x, const MetricCategory&) {
    return One(Coherence(Conflicts(x).closure(), x.schema));
  });
  add("intensional_completeness", [](const AssessmentContext& x, const MetricCategory&) {
    return One(IntensionalCompleteness(Conflicts(x).closure(), x.schema));
  });
  add("extensional_completeness", [](const AssessmentContext& x, const MetricCategory&) {
    return One(ExtensionalCompleteness(Conflicts(x).closure(), x.schema));
  });
  add("lds_completeness", [](const AssessmentContext& x, const MetricCategory&) { return LdsOf(x); });
  add("relevancy_ratio", [](const AssessmentContext& x, const MetricCategory&) {
    return One(RelevancyRatio(x.graph, x.schema.relevance_patterns));
  });
  add("syntax_validity",
      [](const AssessmentContext& x, const MetricCategory&) { return SyntaxValidity(x); });
  add("link_stats", [](const AssessmentContext& x, const MetricCategory& c) {
    return One(LinkStatsResult(ComputeLinkStats(x.graph, x.namespaces), c.evaluator->parameter));
  });
  add("redundancy_ratio", [](const AssessmentContext& x, const MetricCategory&) {
    return One(RedundancyRatio(x.graph, x.schema));
  });
  add("uri_quality",
      [](const AssessmentContext& x, const MetricCategory&) { return UriQualityWithProbes(x); });
  add("naming_convention_ratio", [](const AssessmentContext& x, const MetricCategory&) {
    return One(NamingConventionRatio(x.graph));
  });
  add("typing_ratio", [](const AssessmentContext& x, const MetricCategory&) {
    return One(TypingRatio(x.graph));
  });
  add("labels_ratio", [](const AssessmentContext& x, const MetricCategory&) {
    return One(LabelsRatio(x.graph, x.namespaces));
  });
  add("language_tag_ratio", [](const AssessmentContext& x, const MetricCategory&) {
    return One(LanguageTagRatio(x.graph));
  });
  add("provenance_check", [](const AssessmentContext& x, const MetricCategory& c) {
    return One(ProvenanceResult(CheckProvenance(x.dataset), c.evaluator->parameter));
  });
  // medium
  add("format_profile", FormatProfiles);
  add("format_score",
      [](const AssessmentContext& x, const MetricCategory&) { return FormatScores(x); });
  add("concision",
      [](const AssessmentContext& x, const MetricCategory&) { return ConcisionOfInputs(x); });
  // container
  add("availability", [](const AssessmentContext& x, const MetricCategory&) {
    return One(Availability(Log(x)));
  });
  add("response_time_stats", [](const AssessmentContext& x, const MetricCategory&) {
    return One(ResponseTimeResult(ComputeResponseTimeStats(Log(x))));
  });
  add("robustness", [](const AssessmentContext& x, const MetricCategory&) {
    return One(Robustness(Log(x), x.probe.robustness_window));
  });
  add("accessibility_methods", [](const AssessmentContext& x, const MetricCategory&) {
    return One(AccessibilityMethods(x.dataset));
  });
  add("connectedness",
      [](const AssessmentContext& x, const MetricCategory&) { return ConnectednessOfInputs(x); });
  return m;
}

}  // namespace

const std::map<std::string, Evaluator>& EvaluatorRegistry() {
  static const std::map<std::string, Evaluator> kRegistry = BuildRegistry();
  return kRegistry;
}

}  // namespace ldq
