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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "ldq/error.h"
#include "ldq/parse/format.h"
#include "ldq/parse/parser.h"
#include "ldq/rdf/vocab.h"
#include "malformed_cases.h"
#include "random_graphs.h"

namespace ldq {
namespace {

Term Ex(const std::string& local) { return Term::Iri("http://ex.org/" + local); }

TEST(ParseTest, EmptyInput) {
  ParseOutcome out = Parse("", FormatId::kNTriples);
  EXPECT_TRUE(out.dataset.empty());
  EXPECT_TRUE(out.diagnostics.empty());
}

TEST(ParseTest, OneWellFormedLine) {
  ParseOutcome out = Parse("<a:s> <a:p> \"x\" .\n", FormatId::kNTriples);
  EXPECT_EQ(out.dataset.default_graph.size(), 1u);
  EXPECT_TRUE(out.diagnostics.empty());
  EXPECT_TRUE(out.dataset.default_graph.Contains(
      Triple(Term::Iri("a:s"), Term::Iri("a:p"), Term::Literal("x"))));
}

TEST(ParseTest, MissingDotOnLineTwoLenient) {
  ParseOutcome out = Parse("<a:s> <a:p> \"x\" .\n<a:s> <a:p> \"y\"\n", FormatId::kNTriples);
  EXPECT_EQ(out.dataset.default_graph.size(), 1u);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].line, 2u);
  EXPECT_EQ(out.diagnostics[0].code, "missing-dot");
}

TEST(ParseTest, MissingDotStrictKeepsNothing) {
  ParseOutcome out = Parse("<a:s> <a:p> \"x\" .\n<a:s> <a:p> \"y\"\n", FormatId::kNTriples,
                           ParseMode::kStrict);
  EXPECT_TRUE(out.dataset.empty());
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].line, 2u);
}

TEST(ParseTest, UnsupportedAndEncodingErrors) {
  try {
    Parse("<x/>", FormatId::kRdfXmlUnsupported);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedFormat);
  }
  try {
    Parse("<a:s> <a:p> \"\xff\" .", FormatId::kNTriples);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEncoding);
    EXPECT_NE(std::string(e.what()).find("offset 13"), std::string::npos);
  }
}

TEST(ParseTest, NQuadsNamedGraphs) {
  ParseOutcome out = Parse("<a:s> <a:p> <a:o> <a:g> .\n<a:s> <a:p> <a:o> .\n", FormatId::kNQuads);
  EXPECT_TRUE(out.diagnostics.empty());
  EXPECT_EQ(out.dataset.default_graph.size(), 1u);
  EXPECT_EQ(out.dataset.named_graphs.at(Term::Iri("a:g")).size(), 1u);
}

TEST(ParseTest, EscapesDecode) {
  ParseOutcome out = Parse("<a:s> <a:p> \"tab\\there \\u00e9\\U0001F600\" .", FormatId::kNTriples);
  ASSERT_EQ(out.dataset.default_graph.size(), 1u);
  EXPECT_EQ(out.dataset.default_graph.begin()->object().value(), "tab\there \xC3\xA9\xF0\x9F\x98\x80");
}

TEST(TurtleTest, PrefixesAbbreviationsAndKeywords) {
  const char* doc = R"(@prefix ex: <http://ex.org/> .
@base <http://ex.org/base/> .
ex:s a ex:C ;
  ex:p ex:o1 , ex:o2 ;
  ex:n 42, 1.5, 1e3, true ;
  ex:l "hi"@en, """multi
line""" ;
  ex:r <rel> ;
  ex:b [ ex:q "inner" ] .
)";
  ParseOutcome out = Parse(doc, FormatId::kTurtle);
  ASSERT_TRUE(out.diagnostics.empty()) << FormatDiagnostic(out.diagnostics[0]);
  const Graph& g = out.dataset.default_graph;
  EXPECT_EQ(g.size(), 12u);
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Term::Iri(std::string(vocab::kRdfType)), Ex("C"))));
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Ex("n"), Term::Literal("42", std::string(vocab::kXsdInteger)))));
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Ex("n"), Term::Literal("1.5", std::string(vocab::kXsdDecimal)))));
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Ex("n"), Term::Literal("1e3", std::string(vocab::kXsdDouble)))));
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Ex("n"), Term::Literal("true", std::string(vocab::kXsdBoolean)))));
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Ex("l"), Term::Literal("multi\nline"))));
  EXPECT_TRUE(g.Contains(Triple(Ex("s"), Ex("r"), Term::Iri("http://ex.org/base/rel"))));
}

TEST(TurtleTest, SparqlStyleDirectives) {
  ParseOutcome out = Parse("PREFIX ex: <http://ex.org/>\nex:s ex:p ex:o .\n", FormatId::kTurtle);
  EXPECT_TRUE(out.diagnostics.empty());
  EXPECT_TRUE(out.dataset.default_graph.Contains(Triple(Ex("s"), Ex("p"), Ex("o"))));
}

TEST(TurtleTest, LenientRecoveryDropsWholeStatement) {
  const char* doc = "@prefix ex: <http://ex.org/> .\nex:a ex:p ex:b ;\n  ex:q nope:x .\nex:c ex:p ex:d .\n";
  ParseOutcome out = Parse(doc, FormatId::kTurtle);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].line, 3u);
  EXPECT_EQ(out.diagnostics[0].code, "undefined-prefix");
  EXPECT_EQ(out.dataset.default_graph.size(), 1u);
  EXPECT_TRUE(out.dataset.default_graph.Contains(Triple(Ex("c"), Ex("p"), Ex("d"))));
}

TEST(TurtleTest, CollectionsAreRejected) {
  ParseOutcome out = Parse("<a:s> <a:p> ( <a:x> ) .", FormatId::kTurtle);
  ASSERT_EQ(out.diagnostics.size(), 1u);
  EXPECT_EQ(out.diagnostics[0].code, "unsupported-collection");
}

using testing::MalformedCase;
using testing::kMalformed;

class MalformedInputTest : public ::testing::TestWithParam<MalformedCase> {};

TEST_P(MalformedInputTest, ReportsPositionedDiagnostic) {
  const MalformedCase& c = GetParam();
  ParseOutcome out = Parse(c.input, c.format);
  ASSERT_FALSE(out.diagnostics.empty());
  EXPECT_EQ(out.diagnostics[0].line, c.line);
  EXPECT_EQ(out.diagnostics[0].code, c.code);
  EXPECT_GE(out.diagnostics[0].column, 1u);
  ParseOutcome strict = Parse(c.input, c.format, ParseMode::kStrict);
  EXPECT_TRUE(strict.dataset.empty());
  EXPECT_EQ(strict.diagnostics.size(), 1u);
}


INSTANTIATE_TEST_SUITE_P(Cases, MalformedInputTest, ::testing::ValuesIn(kMalformed),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(SerializeTest, EmptyDatasetIsEmpty) {
  EXPECT_EQ(Serialize(Dataset{}, FormatId::kNTriples), "");
}

TEST(SerializeTest, SortedAndDeterministic) {
  Dataset d;
  d.default_graph.Insert(Triple(Ex("b"), Ex("p"), Ex("o")));
  d.default_graph.Insert(Triple(Ex("a"), Ex("p"), Term::Literal("x")));
  std::string first = Serialize(d, FormatId::kNTriples);
  EXPECT_EQ(first,
            "<http://ex.org/a> <http://ex.org/p> \"x\" .\n"
            "<http://ex.org/b> <http://ex.org/p> <http://ex.org/o> .\n");
  EXPECT_EQ(Serialize(d, FormatId::kNTriples), first);
}

TEST(SerializeTest, NamedGraphsNeedNQuads) {
  Dataset d;
  d.named_graphs[Ex("g")].Insert(Triple(Ex("s"), Ex("p"), Ex("o")));
  EXPECT_THROW(Serialize(d, FormatId::kNTriples), Error);
  EXPECT_EQ(Serialize(d, FormatId::kNQuads),
            "<http://ex.org/s> <http://ex.org/p> <http://ex.org/o> <http://ex.org/g> .\n");
  EXPECT_THROW(Serialize(d, FormatId::kTurtle), Error);
}

TEST(SerializeTest, TenTripleRoundTrip) {
  Dataset d;
  for (int i = 0; i < 10; ++i) {
    d.default_graph.Insert(Triple(Ex("s" + std::to_string(i % 3)), Ex("p"),
                                  Term::Literal("v\"" + std::to_string(i) + "\n")));
  }
  std::string bytes = Serialize(d, FormatId::kNTriples);
  ParseOutcome back = Parse(bytes, FormatId::kNTriples, ParseMode::kStrict);
  EXPECT_TRUE(back.diagnostics.empty());
  EXPECT_EQ(back.dataset, d);
}

TEST(SerializeTest, RandomDatasetsRoundTrip) {
  std::mt19937_64 rng(7);
  testing::RandomVocabulary vocab;
  for (int round = 0; round < 100; ++round) {
    Dataset d;
    d.default_graph = testing::RandomGraph(rng, vocab, 180);
    if (round % 2 == 0) {
      Graph named = testing::RandomGraph(rng, vocab, 20);
      if (!named.empty()) d.named_graphs[Ex("g1")] = std::move(named);
    }
    FormatId format = d.named_graphs.empty() ? FormatId::kNTriples : FormatId::kNQuads;
    ParseOutcome back = Parse(Serialize(d, format), format, ParseMode::kStrict);
    ASSERT_TRUE(back.diagnostics.empty());
    EXPECT_EQ(back.dataset, d);
  }
}

TEST(DetectFormatTest, RuleTable) {
  EXPECT_EQ(DetectFormat("<a:s> <a:p> <a:o> .\n", "data.nt"), FormatId::kNTriples);
  EXPECT_EQ(DetectFormat("@prefix ex: <http://ex.org/> .\n", std::nullopt), FormatId::kTurtle);
  EXPECT_EQ(DetectFormat("<?xml version=\"1.0\"?>\n<rdf:RDF/>", std::nullopt),
            FormatId::kRdfXmlUnsupported);
  EXPECT_EQ(DetectFormat("<a:s> <a:p> <a:o> <a:g> .\n", std::nullopt), FormatId::kNQuads);
  EXPECT_EQ(DetectFormat("", std::nullopt), FormatId::kNTriples);
  EXPECT_EQ(DetectFormat("hello world", std::nullopt), FormatId::kUnknown);
  // A line-oriented body is valid Turtle, so the hint wins.
  EXPECT_EQ(DetectFormat("<a:s> <a:p> <a:o> .\n", "data.ttl"), FormatId::kTurtle);
  // Turtle content contradicts an .nt hint; sniffing wins.
  EXPECT_EQ(DetectFormat("@prefix ex: <http://ex.org/> .\n", "data.nt"), FormatId::kTurtle);
  EXPECT_EQ(DetectFormat("<a:s> <a:p> <a:o> ;\n <a:q> <a:r> .", std::nullopt), FormatId::kTurtle);
}

TEST(StatsTest, EmptyAndSingleTriple) {
  SerializationStats empty = ComputeStats("", FormatId::kNTriples);
  EXPECT_EQ(empty.byte_count, 0u);
  EXPECT_EQ(empty.triple_count, 0u);
  std::string line = "<a:s> <a:p> <a:o12345> .";
  ASSERT_EQ(line.size(), 24u);
  SerializationStats one = ComputeStats(line, FormatId::kNTriples);
  EXPECT_EQ(one.byte_count, 24u);
  EXPECT_EQ(one.triple_count, 1u);
  EXPECT_THROW(ComputeStats("<a:s> <a:p> .", FormatId::kNTriples), Error);
}

TEST(StatsTest, PrefixedTurtleIsSmallerThanNTriples) {
  const char* turtle =
      "@prefix ex: <http://example.org/vocabulary/> .\n"
      "ex:alice ex:knows ex:bob , ex:carol ;\n  ex:name \"Alice\" .\n"
      "ex:bob ex:knows ex:carol ;\n  ex:name \"Bob\" .\n";
  ParseOutcome parsed = Parse(turtle, FormatId::kTurtle, ParseMode::kStrict);
  std::string ntriples = Serialize(parsed.dataset, FormatId::kNTriples);
  SerializationStats t = ComputeStats(turtle, FormatId::kTurtle);
  SerializationStats n = ComputeStats(ntriples, FormatId::kNTriples);
  EXPECT_EQ(t.triple_count, n.triple_count);
  EXPECT_LT(t.byte_count, n.byte_count);
}

}  // namespace
}  // namespace ldq
