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
#include <map>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "ldq/error.h"
#include "ldq/rdf/closure.h"
#include "ldq/rdf/graph.h"
#include "ldq/rdf/schema.h"
#include "ldq/rdf/vocab.h"
#include "oracles.h"
#include "random_graphs.h"

namespace ldq {
namespace {

Term Ex(const std::string& local) { return Term::Iri("http://ex.org/" + local); }
using testing::NaiveClosure;
using testing::TypeIri;

TEST(TermTest, RejectsRelativeIri) {
  EXPECT_THROW(Term::Iri("relative/path"), Error);
  EXPECT_NO_THROW(Term::Iri("urn:x"));
}

TEST(TermTest, LanguageTagOnlyOnLangString) {
  Term lit = Term::LangLiteral("chat", "FR");
  EXPECT_EQ(lit.language(), "fr");
  EXPECT_EQ(lit.datatype(), vocab::kRdfLangString);
  EXPECT_THROW(Term::Literal("x", std::string(vocab::kRdfLangString)), Error);
}

TEST(TermTest, EqualityComparesAllFields) {
  EXPECT_EQ(Term::Literal("1"), Term::Literal("1"));
  EXPECT_NE(Term::Literal("1"), Term::Literal("1", std::string(vocab::kXsdInteger)));
  EXPECT_NE(Term::Iri("http://a"), Term::Blank("http://a"));
}

TEST(TermTest, NTriplesEscaping) {
  EXPECT_EQ(ToNTriples(Term::Literal("a\"b\\c\nd")), "\"a\\\"b\\\\c\\nd\"");
  EXPECT_EQ(ToNTriples(Term::Literal("\x01")), "\"\\u0001\"");
  EXPECT_EQ(ToNTriples(Term::LangLiteral("x", "en-GB")), "\"x\"@en-gb");
  EXPECT_EQ(ToNTriples(Term::Literal("5", std::string(vocab::kXsdInteger))),
            "\"5\"^^<http://www.w3.org/2001/XMLSchema#integer>");
}

TEST(TripleTest, RejectsLiteralSubjectAndNonIriPredicate) {
  EXPECT_THROW(Triple(Term::Literal("x"), Ex("p"), Ex("o")), Error);
  EXPECT_THROW(Triple(Ex("s"), Term::Blank("b"), Ex("o")), Error);
}

TEST(GraphTest, InsertIntoEmptyGraph) {
  Graph g;
  EXPECT_TRUE(g.Insert(Triple(Ex("s"), Ex("p"), Ex("o"))));
  EXPECT_EQ(g.size(), 1u);
}

TEST(GraphTest, DuplicateInsertIsIgnored) {
  Graph g;
  Triple t(Ex("s"), Ex("p"), Ex("o"));
  EXPECT_TRUE(g.Insert(t));
  EXPECT_FALSE(g.Insert(t));
  EXPECT_EQ(g.size(), 1u);
}

TEST(GraphTest, SubjectIndexReturnsSharedSubjectTriples) {
  Graph g;
  g.Insert(Triple(Ex("s"), Ex("p"), Ex("a")));
  g.Insert(Triple(Ex("s"), Ex("p"), Ex("b")));
  g.Insert(Triple(Ex("s"), Ex("q"), Term::Literal("c")));
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.WithSubject(Ex("s")).size(), 3u);
  EXPECT_EQ(g.WithPredicate(Ex("p")).size(), 2u);
  EXPECT_EQ(g.WithObject(Ex("a")).size(), 1u);
}

TEST(GraphTest, CopyKeepsIndexesConsistent) {
  Graph g;
  g.Insert(Triple(Ex("s"), Ex("p"), Ex("a")));
  Graph copy = g;
  copy.Insert(Triple(Ex("s"), Ex("p"), Ex("b")));
  EXPECT_EQ(g.WithSubject(Ex("s")).size(), 1u);
  EXPECT_EQ(copy.WithSubject(Ex("s")).size(), 2u);
  Graph moved = std::move(copy);
  EXPECT_EQ(moved.WithPredicate(Ex("p")).size(), 2u);
}

TEST(MatchPatternTest, AllVariablePatternMatchesEverything) {
  Graph g;
  for (int i = 0; i < 5; ++i) g.Insert(Triple(Ex("s"), Ex("p"), Ex("o" + std::to_string(i))));
  EXPECT_EQ(MatchPattern(g, TriplePattern::Any()).size(), 5u);
}

TEST(MatchPatternTest, ConcretePatternMatchesSingleton) {
  Graph g;
  g.Insert(Triple(Ex("s"), Ex("p"), Ex("o")));
  g.Insert(Triple(Ex("s"), Ex("p"), Ex("o2")));
  auto m = MatchPattern(g, TriplePattern{Ex("s"), Ex("p"), Ex("o")});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], Triple(Ex("s"), Ex("p"), Ex("o")));
}

TEST(MatchPatternTest, RepeatedVariableBindsConsistently) {
  Graph g;
  Term same = Term::Iri(std::string(vocab::kOwlSameAs));
  g.Insert(Triple(Ex("a"), same, Ex("a")));
  g.Insert(Triple(Ex("a"), same, Ex("b")));
  auto m = MatchPattern(g, TriplePattern{Variable{"x"}, same, Variable{"x"}});
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], Triple(Ex("a"), same, Ex("a")));
}

TEST(FrameTest, EmptyAndGrowingFrames) {
  Graph g;
  EXPECT_TRUE(FrameOf(g, Ex("s")).triples.empty());
  g.Insert(Triple(Ex("s"), Ex("p"), Ex("a")));
  g.Insert(Triple(Ex("s"), Ex("q"), Ex("b")));
  g.Insert(Triple(Ex("t"), Ex("q"), Ex("b")));
  EXPECT_EQ(FrameOf(g, Ex("s")).triples.size(), 2u);
  g.Insert(Triple(Ex("s"), Ex("r"), Ex("c")));
  EXPECT_EQ(FrameOf(g, Ex("s")).triples.size(), 3u);
  EXPECT_THROW(FrameOf(g, Term::Literal("x")), Error);
}

TEST(DegreeTest, AbsentStarAndSelfLoop) {
  Graph g;
  EXPECT_EQ(DegreeOf(g, Ex("x")), (Degree{0, 0}));
  for (int i = 0; i < 4; ++i) g.Insert(Triple(Ex("hub"), Ex("p"), Ex("leaf" + std::to_string(i))));
  EXPECT_EQ(DegreeOf(g, Ex("hub")), (Degree{4, 0}));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(DegreeOf(g, Ex("leaf" + std::to_string(i))), (Degree{0, 1}));
  Graph loop;
  loop.Insert(Triple(Ex("a"), Ex("p"), Ex("a")));
  EXPECT_EQ(DegreeOf(loop, Ex("a")), (Degree{1, 1}));
}

TEST(ClosureTest, EmptySchemaIsIdentity) {
  Graph g;
  g.Insert(Triple(Ex("a"), TypeIri(), Ex("C1")));
  EXPECT_EQ(RdfsClosure(g, SchemaSpec{}), g);
}

TEST(ClosureTest, OneStepSubclass) {
  Graph g;
  g.Insert(Triple(Ex("a"), TypeIri(), Ex("C1")));
  SchemaSpec schema;
  schema.subclass_edges.insert({Ex("C1"), Ex("C2")});
  EXPECT_TRUE(RdfsClosure(g, schema).Contains(Triple(Ex("a"), TypeIri(), Ex("C2"))));
}

TEST(ClosureTest, ChainReachesFixpoint) {
  Graph g;
  g.Insert(Triple(Ex("a"), TypeIri(), Ex("C1")));
  SchemaSpec schema;
  schema.subclass_edges.insert({Ex("C1"), Ex("C2")});
  schema.subclass_edges.insert({Ex("C2"), Ex("C3")});
  Graph closed = RdfsClosure(g, schema);
  EXPECT_TRUE(closed.Contains(Triple(Ex("a"), TypeIri(), Ex("C3"))));
  EXPECT_EQ(RdfsClosure(closed, schema), closed);
}

TEST(ClosureTest, CyclicSubclassesTerminate) {
  Graph g;
  g.Insert(Triple(Ex("a"), TypeIri(), Ex("C1")));
  SchemaSpec schema;
  schema.subclass_edges.insert({Ex("C1"), Ex("C2")});
  schema.subclass_edges.insert({Ex("C2"), Ex("C1")});
  EXPECT_EQ(RdfsClosure(g, schema).size(), 2u);
}

TEST(ClosureTest, SubpropertyDomainAndRange) {
  Graph g;
  g.Insert(Triple(Ex("a"), Ex("p"), Ex("b")));
  g.Insert(Triple(Ex("a"), Ex("p"), Term::Literal("lit")));
  SchemaSpec schema;
  schema.subproperty_edges.insert({Ex("p"), Ex("q")});
  schema.domains.insert({Ex("q"), Ex("D")});
  schema.ranges.insert({Ex("p"), Ex("R")});
  Graph closed = RdfsClosure(g, schema);
  EXPECT_TRUE(closed.Contains(Triple(Ex("a"), Ex("q"), Ex("b"))));
  EXPECT_TRUE(closed.Contains(Triple(Ex("a"), TypeIri(), Ex("D"))));
  EXPECT_TRUE(closed.Contains(Triple(Ex("b"), TypeIri(), Ex("R"))));
  EXPECT_EQ(closed.size(), 6u);
}

TEST(SchemaTest, ReadsDeclarationsFromGraph) {
  Graph g;
  g.Insert(Triple(Ex("C1"), Term::Iri(std::string(vocab::kRdfsSubClassOf)), Ex("C2")));
  g.Insert(Triple(Ex("p"), TypeIri(), Term::Iri(std::string(vocab::kOwlFunctionalProperty))));
  g.Insert(Triple(Ex("C1"), Term::Iri(std::string(vocab::kOwlDisjointWith)), Ex("C3")));
  g.Insert(Triple(Ex("C1"), Term::Iri(std::string(vocab::kLdqRequiredProperty)), Ex("p")));
  g.Insert(Triple(Ex("ds"), Term::Iri(std::string(vocab::kLdqRequiredTerm)), Ex("t")));
  SchemaSpec s = SchemaFromGraph(g);
  EXPECT_TRUE(s.subclass_edges.contains({Ex("C1"), Ex("C2")}));
  EXPECT_TRUE(s.functional_properties.contains(Ex("p")));
  EXPECT_TRUE(s.disjoint_classes.contains({Ex("C1"), Ex("C3")}));
  EXPECT_EQ(s.required_properties.at(Ex("C1")), std::set<Term>{Ex("p")});
  EXPECT_TRUE(s.required_terms.contains(Ex("t")));
}

class RandomGraphProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng_{20261014};
  testing::RandomVocabulary vocab_;
};

TEST_F(RandomGraphProperties, MatchesEqualBruteForceScan) {
  for (int round = 0; round < 100; ++round) {
    Graph g = testing::RandomGraph(rng_, vocab_, 50);
    auto pick_slot = [&](const std::vector<Term>& pool, const std::string& var) -> PatternTerm {
      switch (std::uniform_int_distribution<int>(0, 2)(rng_)) {
        case 0: return testing::Pick(rng_, pool);
        case 1: return Variable{var};
        default: return Variable{"shared"};
      }
    };
    TriplePattern p{pick_slot(vocab_.nodes, "s"), pick_slot(vocab_.predicates, "p"),
                    pick_slot(vocab_.nodes, "o")};
    std::vector<Triple> got = MatchPattern(g, p);
    std::vector<Triple> expected;
    for (const Triple& t : g) {
      std::map<std::string, Term> binding;
      bool ok = true;
      auto bind = [&](const PatternTerm& slot, const Term& value) {
        if (const Term* fixed = std::get_if<Term>(&slot)) {
          ok = ok && *fixed == value;
          return;
        }
        const std::string& name = std::get<Variable>(slot).name;
        auto [it, fresh] = binding.emplace(name, value);
        ok = ok && (fresh || it->second == value);
      };
      bind(p.subject, t.subject());
      bind(p.predicate, t.predicate());
      bind(p.object, t.object());
      if (ok) expected.push_back(t);
    }
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
    for (const Triple& t : got) EXPECT_TRUE(g.Contains(t));
    if (p.variable_count() == 0) EXPECT_LE(got.size(), 1u);
  }
}

TEST_F(RandomGraphProperties, DegreeSumsEqualTripleCount) {
  for (int round = 0; round < 50; ++round) {
    Graph g = testing::RandomGraph(rng_, vocab_, 50);
    std::set<Term> terms;
    for (const Triple& t : g) {
      terms.insert(t.subject());
      terms.insert(t.object());
    }
    std::size_t out_sum = 0, in_sum = 0;
    for (const Term& t : terms) {
      Degree d = DegreeOf(g, t);
      out_sum += d.out_count;
      in_sum += d.in_count;
    }
    EXPECT_EQ(out_sum, g.size());
    EXPECT_EQ(in_sum, g.size());
  }
}

TEST_F(RandomGraphProperties, FramesPartitionTheGraph) {
  for (int round = 0; round < 50; ++round) {
    Graph g = testing::RandomGraph(rng_, vocab_, 50);
    std::multiset<Triple> from_frames;
    for (const Term& s : g.subjects()) {
      Frame f = FrameOf(g, s);
      for (const Triple& t : f.triples) {
        EXPECT_EQ(t.subject(), s);
        from_frames.insert(t);
      }
    }
    EXPECT_EQ(from_frames, std::multiset<Triple>(g.begin(), g.end()));
  }
}

TEST_F(RandomGraphProperties, ClosureIsMonotoneIdempotentAndMatchesNaiveFixpoint) {
  for (int round = 0; round < 50; ++round) {
    Graph g = testing::RandomGraph(rng_, vocab_, 50);
    SchemaSpec schema;
    for (int i = 0; i < 3; ++i) {
      schema.subclass_edges.insert({testing::Pick(rng_, vocab_.classes),
                                    testing::Pick(rng_, vocab_.classes)});
      schema.subproperty_edges.insert({testing::Pick(rng_, vocab_.predicates),
                                       testing::Pick(rng_, vocab_.predicates)});
    }
    schema.domains.insert({testing::Pick(rng_, vocab_.predicates), testing::Pick(rng_, vocab_.classes)});
    schema.ranges.insert({testing::Pick(rng_, vocab_.predicates), testing::Pick(rng_, vocab_.classes)});
    Graph closed = RdfsClosure(g, schema);
    for (const Triple& t : g) EXPECT_TRUE(closed.Contains(t));
    EXPECT_EQ(RdfsClosure(closed, schema), closed);
    EXPECT_EQ(closed, NaiveClosure(g, schema));
  }
}

}  // namespace
}  // namespace ldq
