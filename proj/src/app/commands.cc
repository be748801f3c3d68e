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

#include "ldq/app/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

namespace ldq {
namespace {

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::size_t BoundDescendants(const TaxonomyGraph& taxonomy, const std::string& id) {
  std::size_t n = 0;
  for (const std::string& d : taxonomy.Descendants(id)) {
    if (d != id && taxonomy.Get(d).evaluator) ++n;
  }
  return n;
}

void ExplainEvaluator(const TaxonomyGraph& taxonomy, const MetricCategory& c, std::ostream& out) {
  if (c.evaluator) {
    out << "evaluator: " << c.evaluator->operation;
    if (!c.evaluator->parameter.empty()) out << " / " << c.evaluator->parameter;
    out << '\n';
    if (c.evaluator->requires_arguments) {
      out << "  needs caller-chosen arguments, so whole-dataset assessments report it "
             "unassessed\n";
    }
    if (!c.evaluator->auxiliary.empty()) {
      out << "  also uses: " << Join(c.evaluator->auxiliary, ", ") << '\n';
    }
    return;
  }
  out << "evaluator: none bound\n";
  std::size_t below = BoundDescendants(taxonomy, c.id);
  if (below > 0) {
    out << "  an aggregation node: its score combines " << below
        << " bound descendant categories\n";
  } else {
    out << "  declared only: the category is kept for taxonomy coverage and no computable "
           "operation over the supported inputs measures it\n";
  }
}

void ExplainProfile(const Profile& p, const std::string& id, std::ostream& out) {
  out << "profile " << p.name << ": " << (p.IsEnabled(id) ? "enabled" : "disabled")
      << ", weight " << p.WeightOf(id) << ", self weight " << p.SelfWeightOf(id)
      << ", combinator " << CombinatorName(p.CombinatorOf(id));
  if (auto it = p.normalizers.find(id); it != p.normalizers.end()) {
    out << ", normalizer target " << it->second.target << ' '
        << DirectionName(it->second.direction);
  }
  out << '\n';
}

// Fixture clocks restart at zero each run; later runs are moved past the
// existing log so per-target timestamps stay non-decreasing.
void ShiftAfter(const ProbeLog& existing, ProbeLog& fresh) {
  if (existing.empty() || fresh.empty()) return;
  std::int64_t last = existing.front().timestamp_ms;
  for (const ProbeOutcome& o : existing) last = std::max(last, o.timestamp_ms);
  std::int64_t first = fresh.front().timestamp_ms;
  for (const ProbeOutcome& o : fresh) first = std::min(first, o.timestamp_ms);
  if (first > last) return;
  std::int64_t shift = last + 1000 - first;
  for (ProbeOutcome& o : fresh) o.timestamp_ms += shift;
}

ProbeLog ReadExistingLog(const std::string& path) {
  if (!std::filesystem::exists(path)) return {};
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, path + ": cannot open probe log");
  try {
    return ReadProbeLog(in);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::optional<FormatId> FormatOption(const std::string& name) {
  if (name.empty()) return std::nullopt;
  std::optional<FormatId> f = ParseFormatName(name);
  if (!f || *f == FormatId::kUnknown) {
    throw Error(ErrorCode::kUnknownFormat, "unknown format " + name);
  }
  return f;
}

}  // namespace

ExitCode ExitCodeFor(ErrorCode code) {
  return code == ErrorCode::kIo ? ExitCode::kIo : ExitCode::kInvalid;
}

ExitCode CmdAssess(const AssessmentConfig& config, std::ostream& out) {
  const TaxonomyGraph& taxonomy = BuiltinTaxonomy();
  Assessment a = Assess(config, taxonomy);
  out << (config.output == OutputFormat::kJson ? ReportJson(a, taxonomy)
                                               : ReportText(a, taxonomy, config.show_all));
  if (!out) throw Error(ErrorCode::kIo, "cannot write the report");
  if (config.threshold) {
    std::optional<double> content = a.tree.ScoreOf(TaxonomyGraph::kContentBranch);
    if (!content || *content < *config.threshold) return ExitCode::kBelowThreshold;
  }
  return ExitCode::kOk;
}

ExitCode CmdTaxonomy(const std::optional<std::string>& root, std::optional<int> depth,
                     std::ostream& out) {
  if (depth && *depth < 0) throw Error(ErrorCode::kConfiguration, "depth must be nonnegative");
  out << RenderTree(BuiltinTaxonomy(), root.value_or(std::string(TaxonomyGraph::kRoot)), depth);
  return ExitCode::kOk;
}

ExitCode CmdExplain(const std::string& id, std::ostream& out) {
  const TaxonomyGraph& taxonomy = BuiltinTaxonomy();
  std::string canonical = taxonomy.Resolve(id);
  const MetricCategory& c = taxonomy.Get(canonical);
  out << canonical << '\n';
  if (canonical != id) out << "alias: " << id << " resolves to " << canonical << '\n';
  out << "label: " << c.label << '\n'
      << "source: " << SourceName(c.source) << "  kind: " << CategoryKindName(c.kind)
      << "  result: " << ResultKindName(c.result_kind) << '\n';
  if (!c.signature.empty()) out << "signature: " << Join(c.signature, ", ") << '\n';
  out << "path: " << TaxonomyPath(taxonomy, canonical) << '\n';
  if (!c.parents.empty()) out << "parents: " << Join(c.parents, ", ") << '\n';
  if (!c.note.empty()) out << "note: " << c.note << '\n';
  if (c.provisional) out << "placement: provisional\n";
  ExplainEvaluator(taxonomy, c, out);
  ExplainProfile(DefaultProfile(taxonomy), canonical, out);
  return ExitCode::kOk;
}

ExitCode CmdProbe(const ProbeCommand& command, std::ostream& out) {
  std::vector<std::string> targets = command.targets;
  if (targets.empty()) {
    Graph subjects;
    for (const InputSpec& spec : command.inputs) {
      for (const Triple& t : LoadInput(spec, false).second.Union()) subjects.Insert(t);
    }
    targets = SampleHttpSubjects(subjects, command.settings.sample_size, command.settings.seed);
  }
  if (targets.empty()) throw Error(ErrorCode::kEmptyTarget, "no probe targets");
  if (command.log_path.empty()) throw Error(ErrorCode::kConfiguration, "probe needs --log PATH");

  ProbeLog log = ReadExistingLog(command.log_path);
  std::unique_ptr<ProbeTransport> transport = OpenTransport(command.settings);
  ProbeOptions options;
  options.timeout = command.settings.timeout;
  ProbeLog fresh = ProbeTargets(*transport, targets, options);
  ShiftAfter(log, fresh);
  {
    std::ofstream append(command.log_path, std::ios::app);
    if (!append) throw Error(ErrorCode::kIo, command.log_path + ": cannot open for appending");
    WriteProbeLog(append, fresh);
    if (!append) throw Error(ErrorCode::kIo, command.log_path + ": write failed");
  }
  log.insert(log.end(), fresh.begin(), fresh.end());

  MetricResult availability = Availability(log);
  out << "probed " << fresh.size() << " targets; log holds " << log.size() << " outcomes\n";
  out << "availability " << availability.value << '\n';
  try {
    ResponseTimeStats stats = ComputeResponseTimeStats(log);
    out << "response time ms: median " << stats.median_ms << "  p90 " << stats.p90_ms << "  max "
        << stats.max_ms << "  over " << stats.successes << " successes\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyTarget) throw;
    out << "response time: no successful outcomes\n";
  }
  return ExitCode::kOk;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linked Data quality assessment", "ldq"};
  app.set_version_flag("--version", std::string(ToolVersion()));
  app.require_subcommand(1);

  AssessmentConfig config;
  std::vector<std::string> inputs;
  std::string format;
  std::vector<std::string> namespaces;
  std::vector<std::string> disabled_rules;
  std::string output = "json";
  long long timeout_ms = 10000;
  long long window_ms = 60000;
  CLI::App* assess = app.add_subcommand("assess", "Assess RDF inputs and print a report");
  assess->add_option("--input", inputs, "RDF input file (repeatable)")->required();
  assess->add_option("--format", format, "ntriples, nquads or turtle; detected when omitted");
  assess->add_option("--schema", config.schema_path, "RDF file with schema declarations");
  assess->add_option("--profile", config.profile_path, "JSON profile merged over the default");
  assess->add_option("--namespaces", namespaces, "Local namespace prefix (repeatable)");
  assess->add_option("--disable-rule", disabled_rules,
                     "Conflict rule to skip: functional-property, disjoint-classes, "
                     "contradiction-predicate, datatype-violation");
  assess->add_flag("--probe", config.probe.enabled, "Probe http subjects");
  assess->add_option("--probe-transport", config.probe.transport, "live or fixture:PATH");
  assess->add_option("--sample", config.probe.sample_size, "Subjects to probe");
  assess->add_option("--seed", config.probe.seed, "Sampling seed");
  assess->add_option("--timeout-ms", timeout_ms, "Per-probe timeout");
  assess->add_option("--robustness-window-ms", window_ms, "Window of the robustness metric");
  assess->add_flag("--strict", config.strict, "Fail on the first syntax error");
  assess->add_option("--threshold", config.threshold, "Exit 1 when the content score is below");
  assess->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
  assess->add_flag("--all", config.show_all, "Text report: include unscored nodes");
  assess->add_option("--jobs", config.parallelism, "Evaluators run concurrently")
      ->check(CLI::PositiveNumber);

  std::optional<std::string> root;
  std::optional<int> depth;
  CLI::App* taxonomy = app.add_subcommand("taxonomy", "Print the category tree");
  taxonomy->add_option("--root", root, "Subtree root id");
  taxonomy->add_option("--depth", depth, "Levels below the root");

  std::string explain_id;
  CLI::App* explain = app.add_subcommand("explain", "Document one category");
  explain->add_option("id", explain_id, "Category id or alias")->required();

  ProbeCommand probe;
  std::vector<std::string> probe_inputs;
  std::string probe_transport;
  long long probe_timeout_ms = 10000;
  CLI::App* probe_cmd = app.add_subcommand("probe", "Probe endpoints and summarize the log");
  probe_cmd->add_option("--target", probe.targets, "URL to probe (repeatable)");
  probe_cmd->add_option("--input", probe_inputs, "Sample targets from this RDF file");
  probe_cmd->add_option("--log", probe.log_path, "Line-delimited JSON probe log")->required();
  probe_cmd->add_option("--probe-transport", probe_transport, "live or fixture:PATH")->required();
  probe_cmd->add_option("--sample", probe.settings.sample_size, "Subjects to probe");
  probe_cmd->add_option("--seed", probe.settings.seed, "Sampling seed");
  probe_cmd->add_option("--timeout-ms", probe_timeout_ms, "Per-probe timeout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kInvalid);
  }

  try {
    ExitCode code = ExitCode::kOk;
    if (*assess) {
      std::optional<FormatId> f = FormatOption(format);
      for (const std::string& path : inputs) config.inputs.push_back({path, f});
      config.namespaces = {namespaces.begin(), namespaces.end()};
      for (const std::string& name : disabled_rules) {
        std::optional<ConflictRuleKind> kind = ParseConflictRuleKind(name);
        if (!kind) throw Error(ErrorCode::kConfiguration, "unknown conflict rule " + name);
        config.disabled_rules.insert(*kind);
      }
      if (timeout_ms <= 0 || window_ms <= 0) {
        throw Error(ErrorCode::kConfiguration, "timeouts and windows must be positive");
      }
      config.probe.timeout = std::chrono::milliseconds(timeout_ms);
      config.probe.robustness_window = std::chrono::milliseconds(window_ms);
      config.output = output == "text" ? OutputFormat::kText : OutputFormat::kJson;
      code = CmdAssess(config, out);
    } else if (*taxonomy) {
      code = CmdTaxonomy(root, depth, out);
    } else if (*explain) {
      code = CmdExplain(explain_id, out);
    } else if (*probe_cmd) {
      for (const std::string& path : probe_inputs) probe.inputs.push_back({path, std::nullopt});
      if (probe_timeout_ms <= 0) throw Error(ErrorCode::kConfiguration, "timeout must be positive");
      probe.settings.enabled = true;
      probe.settings.transport = probe_transport;
      probe.settings.timeout = std::chrono::milliseconds(probe_timeout_ms);
      code = CmdProbe(probe, out);
    }
    out.flush();
    return static_cast<int>(code);
  } catch (const Error& e) {
    err << "ldq: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return static_cast<int>(ExitCodeFor(e.code()));
  } catch (const std::exception& e) {
    err << "ldq: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kInvalid);
  }
}

}  // namespace ldq
