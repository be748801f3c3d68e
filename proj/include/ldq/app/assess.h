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

#ifndef LDQ_APP_ASSESS_H_
#define LDQ_APP_ASSESS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ldq/aggregate/aggregate.h"
#include "ldq/metrics/container.h"
#include "ldq/metrics/content.h"
#include "ldq/metrics/medium.h"
#include "ldq/parse/parser.h"
#include "ldq/rdf/closure.h"
#include "ldq/taxonomy/taxonomy.h"

namespace ldq {

std::string_view ToolVersion();

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(std::string_view bytes);

struct InputSpec {
  std::string path;
  // Detected from content and extension when absent.
  std::optional<FormatId> format;
};

struct ProbeSettings {
  bool enabled = false;
  std::size_t sample_size = 10;
  std::uint64_t seed = 1;
  std::chrono::milliseconds timeout{10000};
  // "live" or "fixture:PATH".
  std::string transport = "fixture:";
  std::chrono::milliseconds robustness_window{60000};
};

enum class OutputFormat { kJson, kText };

struct AssessmentConfig {
  std::vector<InputSpec> inputs;
  std::optional<std::string> schema_path;
  std::optional<std::string> profile_path;
  std::set<ConflictRuleKind> disabled_rules;
  // Inferred from the input when empty.
  std::set<std::string> namespaces;
  ProbeSettings probe;
  OutputFormat output = OutputFormat::kJson;
  bool strict = false;
  std::optional<double> threshold;
  bool show_all = false;
  std::size_t parallelism = 1;
};

struct LoadedInput {
  std::string path;
  FormatId format = FormatId::kUnknown;
  std::string sha256;
  std::size_t byte_count = 0;
  std::size_t statement_count = 0;
  std::vector<ParseDiagnostic> diagnostics;

  std::size_t error_count() const;
};

// Everything the evaluators read. Built once in place, then shared
// read-only; `conflicts` points into `graph`, so the context never moves.
struct AssessmentContext {
  std::vector<LoadedInput> inputs;
  // Per input, in input order.
  std::vector<Dataset> datasets;
  Dataset dataset;
  Graph graph;
  SchemaSpec schema;
  std::vector<ConflictRule> rules;
  std::set<std::string> namespaces;
  FormatProfileTable format_table = DefaultProfileTable();
  // Also holds the entailment closure of `graph`.
  std::optional<ConflictAnalysis> conflicts;
  std::optional<ProbeLog> probe_log;
  ProbeSettings probe;
};

// Reads and parses one input. Throws kIo when unreadable; in strict mode
// throws kParse naming path, line and column of the first error.
std::pair<LoadedInput, Dataset> LoadInput(const InputSpec& spec, bool strict);

// The categories' evaluator dispatch: (operation, parameter) -> results for
// that category. An Error thrown by an evaluator marks the node: kEmptyTarget
// leaves it unassessed, anything else is an error.
using Evaluator =
    std::function<std::vector<MetricResult>(const AssessmentContext&, const MetricCategory&)>;
const std::map<std::string, Evaluator>& EvaluatorRegistry();

// One run: its inputs, effective profile and scored tree.
struct Assessment {
  std::shared_ptr<const AssessmentContext> context;
  Profile profile;
  AssessmentTree tree;
};

// The shipped default profile when `LDQ_DEFAULT_PROFILE` is unset, else the
// file it names.
Profile DefaultProfile(const TaxonomyGraph& taxonomy);
std::string_view BuiltinDefaultProfileJson();

// Builds the context, runs every enabled evaluator with at most
// `config.parallelism` in flight, and aggregates. `transport` overrides the
// configured probe transport when given.
Assessment Assess(const AssessmentConfig& config, const TaxonomyGraph& taxonomy,
                  ProbeTransport* transport = nullptr);

// Opens the configured transport. Throws kConfiguration on a malformed
// setting and kIo when the fixture file cannot be read.
std::unique_ptr<ProbeTransport> OpenTransport(const ProbeSettings& settings);

// Deterministic JSON report: fields in fixed order, nodes in taxonomy order.
std::string ReportJson(const Assessment& assessment, const TaxonomyGraph& taxonomy);
// Indented text; measured and aggregated nodes only unless `show_all`.
std::string ReportText(const Assessment& assessment, const TaxonomyGraph& taxonomy, bool show_all);

// First-parent path from the root to `id`, joined with '/'.
std::string TaxonomyPath(const TaxonomyGraph& taxonomy, std::string_view id);

}  // namespace ldq

#endif  // LDQ_APP_ASSESS_H_
