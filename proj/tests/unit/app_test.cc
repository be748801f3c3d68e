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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "ldq/app/commands.h"
#include "ldq/error.h"
#include "oracles.h"

namespace ldq {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kData = LDQ_TEST_DATA_DIR;
const std::string kRepoData = LDQ_REPO_DATA_DIR;
const std::string kConsistencyAll = "pm:consistency_ratio_of_all_substatements_in_this_statement";

std::string AppData(const std::string& name) { return kData + "/app/" + name; }
std::string Demo(const std::string& name) { return kRepoData + "/demo/" + name; }

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ldq");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliRun run;
  run.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("ldq_app_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

const json& NodeOf(const json& report, const std::string& id) {
  for (const json& n : report["nodes"]) {
    if (n["id"] == id) return n;
  }
  throw std::runtime_error("no node " + id);
}

// A profile leaving only the whole-statement consistency ratios enabled.
std::string OnlyConsistencyRatioProfile() {
  json disabled = json::array();
  for (const std::string& id : EnabledCategories(Profile{}, BuiltinTaxonomy())) {
    if (BuiltinTaxonomy().Get(id).evaluator->operation != "consistency_ratio_all") {
      disabled.push_back(id);
    }
  }
  return json{{"name", "consistency-only"}, {"disabled", disabled}}.dump();
}

// ---- assess ----

TEST(AssessTest, ConflictFreeDemoScoresOneOnConsistency) {
  CliRun run = Cli({"assess", "--input", Demo("library.ttl"), "--schema", Demo("library_schema.ttl")});
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  EXPECT_EQ(NodeOf(report, "pm:consistency")["score"], 1.0);
  EXPECT_EQ(NodeOf(report, "pm:correctness")["score"], 1.0);
  EXPECT_EQ(NodeOf(report, "PD:consistency")["status"], "measured");

  // The oracle agrees that the fixture has no conflicts at all.
  Graph data = testing::ParseTurtle(ReadAll(Demo("library.ttl")));
  SchemaSpec schema = SchemaFromGraph(data);
  schema.Merge(SchemaFromGraph(testing::ParseTurtle(ReadAll(Demo("library_schema.ttl")))));
  EXPECT_TRUE(testing::OracleConflicts(data, schema, DefaultRules(schema)).empty());
}

TEST(AssessTest, OneFunctionalConflictAmongTenTriples) {
  Graph data = testing::ParseTurtle(ReadAll(AppData("one_conflict.ttl")));
  ASSERT_EQ(data.size(), 10u);
  SchemaSpec schema = SchemaFromGraph(data);
  auto [good, total] = testing::OracleConsistencyRatioPattern(data, schema, DefaultRules(schema),
                                                              TriplePattern::Any());
  ASSERT_EQ(good, 8u);
  ASSERT_EQ(total, 10u);

  CliRun run = Cli({"assess", "--input", AppData("one_conflict.ttl")});
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  EXPECT_EQ(NodeOf(report, kConsistencyAll)["score"], 0.8);
  EXPECT_EQ(NodeOf(report, "pm:consistency_of_the_RDF_KB")["score"], 0.0);
}

TEST(AssessTest, ThresholdBelowContentScoreExitsOne) {
  TempDir dir;
  WriteFile(dir.File("profile.json"), OnlyConsistencyRatioProfile());
  std::vector<std::string> base = {"assess", "--input", AppData("one_conflict.ttl"), "--profile",
                                   dir.File("profile.json")};
  CliRun plain = Cli(base);
  ASSERT_EQ(plain.code, 0) << plain.err;
  EXPECT_EQ(json::parse(plain.out)["summary"]["content"]["score"], 0.8);

  auto with = [&](const char* threshold) {
    std::vector<std::string> args = base;
    args.insert(args.end(), {"--threshold", threshold});
    return Cli(args).code;
  };
  EXPECT_EQ(with("0.9"), 1);
  EXPECT_EQ(with("0.8"), 0);
  EXPECT_EQ(with("1.5"), 2);
}

TEST(AssessTest, ExitCodesPerFailureClass) {
  TempDir dir;
  CliRun missing = Cli({"assess", "--input", dir.File("absent.nt")});
  EXPECT_EQ(missing.code, 3);
  EXPECT_NE(missing.err.find("absent.nt"), std::string::npos);

  CliRun strict = Cli({"assess", "--strict", "--input", AppData("broken.nt")});
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.err.find("broken.nt:2:"), std::string::npos) << strict.err;

  EXPECT_EQ(Cli({"assess", "--input", AppData("doc.rdf")}).code, 2);
  EXPECT_EQ(Cli({"assess", "--format", "jsonld", "--input", AppData("broken.nt")}).code, 2);
  EXPECT_EQ(Cli({"assess", "--input", AppData("broken.nt"), "--profile",
                 AppData("malformed_profile.json")})
                .code,
            2);
  CliRun unknown = Cli({"assess", "--input", AppData("broken.nt"), "--profile",
                        AppData("unknown_category_profile.json")});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("pm:nope"), std::string::npos);
  EXPECT_EQ(Cli({"assess", "--input", AppData("broken.nt"), "--profile", dir.File("none.json")}).code,
            3);
  EXPECT_EQ(Cli({"assess", "--input", AppData("broken.nt"), "--disable-rule", "nope"}).code, 2);
  EXPECT_EQ(Cli({"assess", "--input", AppData("broken.nt"), "--output", "xml"}).code, 2);
  EXPECT_EQ(Cli({"assess"}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kIo), ExitCode::kIo);
  EXPECT_EQ(ExitCodeFor(ErrorCode::kEncoding), ExitCode::kInvalid);
}

TEST(AssessTest, LenientInputReportsDiagnosticsAndInvalidity) {
  CliRun run = Cli({"assess", "--input", AppData("broken.nt")});
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  const json& input = report["inputs"][0];
  EXPECT_EQ(input["statements"], 2);
  EXPECT_EQ(input["errors"], 1);
  EXPECT_EQ(input["diagnostics"][0]["line"], 2);
  EXPECT_EQ(NodeOf(report, "SF:validity")["score"], 0.0);
  EXPECT_EQ(NodeOf(report, "pm:format_concision")["status"], "error");
}

TEST(AssessTest, ReportListsEveryNodeOnceWithStatus) {
  CliRun run = Cli({"assess", "--input", Demo("library.ttl")});
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  std::vector<std::string> ids;
  for (const json& n : report["nodes"]) {
    ids.push_back(n["id"]);
    EXPECT_TRUE(n["status"].is_string());
    EXPECT_EQ(n["score"].is_null(), n["status"] != "measured" && n["status"] != "aggregated")
        << n["id"];
  }
  EXPECT_EQ(ids, BuiltinTaxonomy().ids());

  json schema = json::parse(ReadAll(kRepoData + "/../schemas/report.schema.json"));
  for (const json& key : schema["required"]) EXPECT_TRUE(report.contains(key)) << key;
  for (const json& key : schema["$defs"]["node"]["required"]) {
    EXPECT_TRUE(report["nodes"][0].contains(key)) << key;
  }
  EXPECT_EQ(report["inputs"][0]["sha256"], Sha256Hex(ReadAll(Demo("library.ttl"))));
}

TEST(AssessTest, ByteIdenticalAcrossRunsAndParallelism) {
  std::vector<std::string> args = {"assess", "--input", Demo("library.ttl"), "--input",
                                   Demo("authorities.nt"), "--schema", Demo("library_schema.ttl"),
                                   "--probe", "--probe-transport", "fixture:" + Demo("probes.jsonl")};
  CliRun first = Cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(Cli(args).out, first.out);
  args.insert(args.end(), {"--jobs", "4"});
  EXPECT_EQ(Cli(args).out, first.out);
}

TEST(AssessTest, ProbingFillsContainerMetricsFromFixture) {
  CliRun run = Cli({"assess", "--input", Demo("library.ttl"), "--input", Demo("authorities.nt"),
                    "--probe", "--sample", "10",
                    "--probe-transport", "fixture:" + AppData("nine_of_ten.jsonl")});
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  // Ten http subjects in all, answered in turn by one shared ten-entry cycle.
  EXPECT_EQ(NodeOf(report, "PD:availability")["score"], 0.9);
  EXPECT_EQ(NodeOf(report, "PD:response_time")["status"], "measured");
  const json& uri = NodeOf(report, "pm:identification_by_properly_formed_URIs");
  ASSERT_EQ(uri["results"].size(), 2u);
  EXPECT_EQ(uri["results"][1]["mode"], "dereferenceability");
}

TEST(AssessTest, ContainerMetricsUnassessedWithoutProbing) {
  AssessmentConfig config;
  EXPECT_FALSE(config.probe.enabled);
  EXPECT_NE(config.probe.transport, "live");
  CliRun run = Cli({"assess", "--input", Demo("library.ttl")});
  json report = json::parse(run.out);
  EXPECT_EQ(NodeOf(report, "PD:availability")["status"], "unassessed");
  EXPECT_EQ(NodeOf(report, "LD:connectedness")["status"], "unassessed");
  EXPECT_EQ(NodeOf(report, "PD:accessibility")["score"], 0.5);
}

TEST(AssessTest, ConnectednessAcrossTwoInputs) {
  CliRun run = Cli({"assess", "--input", Demo("library.ttl"), "--input", Demo("authorities.nt")});
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  const json& node = NodeOf(report, "LD:connectedness");
  EXPECT_EQ(node["status"], "measured");
  ASSERT_EQ(node["results"].size(), 2u);
  // library: its external objects are three dbpedia authors, two classes,
  // void:Dataset and two access URLs; authorities describes two of the eight.
  // authorities: its one external object, ex:asimov, is a library subject.
  EXPECT_EQ(node["results"][0]["value"], 0.25);
  EXPECT_EQ(node["results"][1]["value"], 1.0);
}

TEST(AssessTest, TextReportHidesUnscoredNodesUnlessAll) {
  CliRun brief = Cli({"assess", "--input", Demo("library.ttl"), "--output", "text"});
  ASSERT_EQ(brief.code, 0) << brief.err;
  EXPECT_EQ(brief.out.find("declared-only"), std::string::npos);
  EXPECT_NE(brief.out.find("PD:consistency  1.0000  measured"), std::string::npos);
  CliRun all = Cli({"assess", "--input", Demo("library.ttl"), "--output", "text", "--all"});
  EXPECT_NE(all.out.find("LD:accuracy  -  declared-only"), std::string::npos);
}

TEST(AssessTest, EnvironmentSelectsDefaultProfile) {
  TempDir dir;
  WriteFile(dir.File("env.json"), OnlyConsistencyRatioProfile());
  ::setenv("LDQ_DEFAULT_PROFILE", dir.File("env.json").c_str(), 1);
  CliRun run = Cli({"assess", "--input", AppData("one_conflict.ttl")});
  ::unsetenv("LDQ_DEFAULT_PROFILE");
  ASSERT_EQ(run.code, 0) << run.err;
  json report = json::parse(run.out);
  EXPECT_EQ(report["profile"], "consistency-only");
  EXPECT_EQ(report["summary"]["content"]["score"], 0.8);
}

TEST(AssessTest, ShippedDefaultProfileMatchesBuiltin) {
  const TaxonomyGraph& t = BuiltinTaxonomy();
  EXPECT_EQ(ParseProfile(ReadAll(kRepoData + "/default_profile.json"), t),
            ParseProfile(BuiltinDefaultProfileJson(), t));
}

TEST(AssessTest, RegistryCoversEveryRunnableBinding) {
  for (const auto& [id, c] : BuiltinTaxonomy().nodes()) {
    if (!c.evaluator || c.evaluator->requires_arguments) continue;
    EXPECT_TRUE(EvaluatorRegistry().contains(c.evaluator->operation)) << id;
  }
}

TEST(AssessTest, Sha256KnownDigests) {
  EXPECT_EQ(Sha256Hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(AssessTest, TaxonomyPathFollowsFirstParents) {
  EXPECT_EQ(TaxonomyPath(BuiltinTaxonomy(), "pm:quality"), "pm:quality");
  std::string path = TaxonomyPath(BuiltinTaxonomy(), "PD:consistency");
  EXPECT_EQ(path.rfind("pm:quality/", 0), 0u);
  EXPECT_EQ(path.substr(path.size() - 15), "/PD:consistency");
}

// ---- taxonomy and explain ----

TEST(TaxonomyCommandTest, RootDepthOneShowsThreeTopCategories) {
  CliRun run = Cli({"taxonomy", "--root", "pm:quality", "--depth", "1"});
  ASSERT_EQ(run.code, 0);
  std::vector<std::string> lines;
  std::istringstream in(run.out);
  for (std::string line; std::getline(in, line);) lines.push_back(line.substr(0, line.find("  [")));
  EXPECT_EQ(lines, (std::vector<std::string>{"pm:quality", "  pm:content_based_quality",
                                             "  pm:meta-statement_based_quality",
                                             "  pm:rating_based_quality"}));
}

TEST(TaxonomyCommandTest, CorrectnessSubtreeAndUnknownRoot) {
  CliRun run = Cli({"taxonomy", "--root", "pm:correctness"});
  ASSERT_EQ(run.code, 0);
  EXPECT_NE(run.out.find("LD:accuracy"), std::string::npos);
  EXPECT_NE(run.out.find("pm:consistency_ratio"), std::string::npos);
  CliRun unknown = Cli({"taxonomy", "--root", "pm:nope"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("unknown-category"), std::string::npos) << unknown.err;
}

TEST(ExplainCommandTest, CitesFrameDefinition) {
  CliRun run = Cli({"explain", "PD:consistency"});
  ASSERT_EQ(run.code, 0);
  EXPECT_NE(run.out.find("number of non-conflicting frames"), std::string::npos);
  EXPECT_NE(run.out.find("evaluator: pd_consistency"), std::string::npos);
}

TEST(ExplainCommandTest, AliasAndDeclaredOnlyAndUnknown) {
  CliRun alias = Cli({"explain", "SF:timeliness"});
  ASSERT_EQ(alias.code, 0);
  EXPECT_NE(alias.out.find("alias: SF:timeliness resolves to PD:timeliness"), std::string::npos);
  CliRun declared = Cli({"explain", "LD:accuracy"});
  EXPECT_NE(declared.out.find("evaluator: none bound"), std::string::npos);
  EXPECT_NE(declared.out.find("declared only"), std::string::npos);
  EXPECT_EQ(Cli({"explain", "pm:nope"}).code, 2);
}

// ---- probe ----

TEST(ProbeCommandTest, NineOfTenThenAppend) {
  TempDir dir;
  std::vector<std::string> args = {"probe", "--log", dir.File("log.jsonl"), "--probe-transport",
                                   "fixture:" + AppData("nine_of_ten.jsonl")};
  for (int i = 0; i < 10; ++i) {
    args.insert(args.end(), {"--target", "http://example.org/r" + std::to_string(i)});
  }
  CliRun first = Cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_NE(first.out.find("availability 0.9\n"), std::string::npos) << first.out;

  std::vector<std::string> again = args;
  again[4] = "fixture:" + AppData("all_ok.jsonl");
  CliRun second = Cli(again);
  ASSERT_EQ(second.code, 0) << second.err;
  // 19 successes over the 20 accumulated outcomes.
  EXPECT_NE(second.out.find("availability 0.95\n"), std::string::npos) << second.out;
  std::ifstream log(dir.File("log.jsonl"));
  ProbeLog all = ReadProbeLog(log);
  EXPECT_EQ(all.size(), 20u);
}

TEST(ProbeCommandTest, TargetsSampledFromInput) {
  TempDir dir;
  CliRun run = Cli({"probe", "--log", dir.File("log.jsonl"), "--input", Demo("library.ttl"),
                    "--sample", "3", "--probe-transport", "fixture:" + AppData("all_ok.jsonl")});
  ASSERT_EQ(run.code, 0) << run.err;
  EXPECT_NE(run.out.find("probed 3 targets"), std::string::npos);
}

TEST(ProbeCommandTest, FailureClasses) {
  TempDir dir;
  CliRun empty = Cli({"probe", "--log", dir.File("log.jsonl"), "--input", AppData("no_http.nt"),
                      "--probe-transport", "fixture:" + AppData("all_ok.jsonl")});
  EXPECT_EQ(empty.code, 2);
  EXPECT_NE(empty.err.find("no probe targets"), std::string::npos);
  EXPECT_EQ(Cli({"probe", "--log", dir.File("no_dir/log.jsonl"), "--target", "http://x.org/a",
                 "--probe-transport", "fixture:" + AppData("all_ok.jsonl")})
                .code,
            3);
  WriteFile(dir.File("bad.jsonl"), "{not json\n");
  EXPECT_EQ(Cli({"probe", "--log", dir.File("bad.jsonl"), "--target", "http://x.org/a",
                 "--probe-transport", "fixture:" + AppData("all_ok.jsonl")})
                .code,
            2);
  EXPECT_EQ(Cli({"probe", "--log", dir.File("log.jsonl"), "--target", "http://x.org/a",
                 "--probe-transport", "carrier-pigeon"})
                .code,
            2);
}

}  // namespace
}  // namespace ldq
