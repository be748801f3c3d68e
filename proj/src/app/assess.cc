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

#include "ldq/app/assess.h"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "ldq/error.h"
#include "ldq/metrics/live_transport.h"

#ifndef LDQ_VERSION
#define LDQ_VERSION "0.0.0"
#endif

namespace ldq {
namespace {

constexpr std::string_view kDefaultProfileJson = R"({
  "name": "default",
  "weights": {},
  "disabled": [],
  "normalizers": {
    "PD:external_links": {"target": 1, "direction": "higher-better"},
    "PD:response_time": {"target": 1000, "direction": "lower-better"},
    "pm:substatements_of_this_1st_statement_that_are_inconsistent_with_this_2nd_statement": {"target": 1, "direction": "lower-better"}
  },
  "combinator": {},
  "self_weights": {}
}
)";

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, path + ": read failed");
  return std::move(buf).str();
}

void MergeInto(Dataset& into, const Dataset& from) {
  for (const Triple& t : from.default_graph) into.default_graph.Insert(t);
  for (const auto& [name, g] : from.named_graphs) {
    Graph& target = into.named_graphs[name];
    for (const Triple& t : g) target.Insert(t);
  }
}

Profile LoadProfileFile(const std::string& path, const TaxonomyGraph& taxonomy) {
  std::string text = ReadFile(path);
  try {
    return ParseProfile(text, taxonomy);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

struct Slot {
  std::vector<MetricResult> results;
  std::optional<NodeIssue> issue;
};

Slot RunEvaluator(const AssessmentContext& ctx, const MetricCategory& category) {
  Slot slot;
  const auto& registry = EvaluatorRegistry();
  auto it = registry.find(category.evaluator->operation);
  if (it == registry.end()) {
    slot.issue = NodeIssue{category.id, NodeStatus::kError,
                           "no evaluator registered for " + category.evaluator->operation};
    return slot;
  }
  try {
    slot.results = it->second(ctx, category);
    for (MetricResult& r : slot.results) r.category_id = category.id;
  } catch (const Error& e) {
    NodeStatus status =
        e.code() == ErrorCode::kEmptyTarget ? NodeStatus::kUnassessed : NodeStatus::kError;
    slot.issue = NodeIssue{category.id, status, e.what()};
  }
  return slot;
}

}  // namespace

std::string_view ToolVersion() { return LDQ_VERSION; }

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kIo, "sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::size_t LoadedInput::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      diagnostics.begin(), diagnostics.end(),
      [](const ParseDiagnostic& d) { return d.severity == Severity::kError; }));
}

std::pair<LoadedInput, Dataset> LoadInput(const InputSpec& spec, bool strict) {
  std::string bytes = ReadFile(spec.path);
  LoadedInput in;
  in.path = spec.path;
  in.format = spec.format ? *spec.format : DetectFormat(bytes, spec.path);
  in.sha256 = Sha256Hex(bytes);
  in.byte_count = bytes.size();
  if (in.format == FormatId::kUnknown) {
    throw Error(ErrorCode::kUnknownFormat, spec.path + ": cannot detect the RDF format");
  }
  ParseOutcome parsed;
  try {
    parsed = Parse(bytes, in.format, strict ? ParseMode::kStrict : ParseMode::kLenient);
  } catch (const Error& e) {
    throw Error(e.code(), spec.path + ": " + e.what());
  }
  if (strict && parsed.has_errors()) {
    for (const ParseDiagnostic& d : parsed.diagnostics) {
      if (d.severity == Severity::kError) {
        throw Error(ErrorCode::kParse, spec.path + ":" + FormatDiagnostic(d));
      }
    }
  }
  in.statement_count = parsed.dataset.statement_count();
  in.diagnostics = std::move(parsed.diagnostics);
  return {std::move(in), std::move(parsed.dataset)};
}

std::string_view BuiltinDefaultProfileJson() { return kDefaultProfileJson; }

Profile DefaultProfile(const TaxonomyGraph& taxonomy) {
  if (const char* path = std::getenv("LDQ_DEFAULT_PROFILE"); path != nullptr && *path != '\0') {
    return LoadProfileFile(path, taxonomy);
  }
  return ParseProfile(kDefaultProfileJson, taxonomy);
}

std::unique_ptr<ProbeTransport> OpenTransport(const ProbeSettings& settings) {
  if (settings.transport == "live") return MakeLiveTransport();
  constexpr std::string_view kFixture = "fixture:";
  if (settings.transport.rfind(kFixture, 0) != 0) {
    throw Error(ErrorCode::kConfiguration,
                "probe transport must be live or fixture:PATH, got " + settings.transport);
  }
  std::string path = settings.transport.substr(kFixture.size());
  if (path.empty()) throw Error(ErrorCode::kConfiguration, "fixture transport needs a path");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open probe fixture");
  auto fixture = std::make_unique<FixtureTransport>();
  try {
    fixture->LoadJsonLines(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  return fixture;
}

Assessment Assess(const AssessmentConfig& config, const TaxonomyGraph& taxonomy,
                  ProbeTransport* transport) {
  if (config.inputs.empty()) throw Error(ErrorCode::kConfiguration, "no input given");
  if (config.threshold && !(*config.threshold >= 0.0 && *config.threshold <= 1.0)) {
    throw Error(ErrorCode::kConfiguration, "threshold must lie in [0, 1]");
  }
  Assessment out;
  out.profile = DefaultProfile(taxonomy);
  if (config.profile_path) {
    out.profile = MergeProfiles(out.profile, LoadProfileFile(*config.profile_path, taxonomy));
  }

  auto ctx = std::make_shared<AssessmentContext>();
  ctx->probe = config.probe;
  for (const InputSpec& spec : config.inputs) {
    auto [in, dataset] = LoadInput(spec, config.strict);
    MergeInto(ctx->dataset, dataset);
    ctx->inputs.push_back(std::move(in));
    ctx->datasets.push_back(std::move(dataset));
  }
  ctx->graph = ctx->dataset.Union();

  // Declarations inside the data count as schema too.
  ctx->schema = SchemaFromGraph(ctx->graph);
  if (config.schema_path) {
    auto [schema_input, schema_data] = LoadInput({*config.schema_path, std::nullopt}, true);
    ctx->schema.Merge(SchemaFromGraph(schema_data.Union()));
  }
  ctx->schema.Validate();
  ctx->rules = DefaultRules(ctx->schema, config.disabled_rules);
  ctx->namespaces = config.namespaces.empty() ? InferNamespaces(ctx->graph) : config.namespaces;
  ctx->conflicts.emplace(ctx->graph, ctx->schema, ctx->rules);

  if (config.probe.enabled) {
    std::unique_ptr<ProbeTransport> owned;
    if (transport == nullptr) {
      owned = OpenTransport(config.probe);
      transport = owned.get();
    }
    std::vector<std::string> targets =
        SampleHttpSubjects(ctx->graph, config.probe.sample_size, config.probe.seed);
    ProbeOptions options;
    options.timeout = config.probe.timeout;
    options.parallelism = std::max<std::size_t>(1, config.parallelism);
    ctx->probe_log = ProbeTargets(*transport, targets, options);
  }

  std::vector<const MetricCategory*> runnable;
  std::vector<NodeIssue> issues;
  for (const std::string& id : taxonomy.ids()) {
    const MetricCategory& c = taxonomy.Get(id);
    if (!c.evaluator || !out.profile.IsEnabled(id)) continue;
    if (c.evaluator->requires_arguments) {
      issues.push_back({id, NodeStatus::kUnassessed,
                        "needs caller-chosen arguments; not run in a whole-dataset assessment"});
      continue;
    }
    runnable.push_back(&c);
  }

  std::vector<Slot> slots(runnable.size());
  std::size_t workers = std::clamp<std::size_t>(config.parallelism, 1, runnable.size() + 1);
  if (workers <= 1) {
    for (std::size_t i = 0; i < runnable.size(); ++i) slots[i] = RunEvaluator(*ctx, *runnable[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < runnable.size(); i = next++) {
          slots[i] = RunEvaluator(*ctx, *runnable[i]);
        }
      });
    }
  }

  std::vector<MetricResult> results;
  for (Slot& slot : slots) {
    for (MetricResult& r : slot.results) results.push_back(std::move(r));
    if (slot.issue) issues.push_back(std::move(*slot.issue));
  }
  out.tree = Aggregate(taxonomy, results, out.profile, issues);
  out.context = std::move(ctx);
  return out;
}

std::string TaxonomyPath(const TaxonomyGraph& taxonomy, std::string_view id) {
  std::vector<std::string> chain;
  std::string current = taxonomy.Resolve(id);
  std::set<std::string> seen;
  while (seen.insert(current).second) {
    chain.push_back(current);
    const MetricCategory& c = taxonomy.Get(current);
    if (c.parents.empty()) break;
    current = c.parents.front();
  }
  std::string out;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (!out.empty()) out += '/';
    out += *it;
  }
  return out;
}

}  // namespace ldq
