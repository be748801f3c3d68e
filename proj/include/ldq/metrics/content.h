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

#ifndef LDQ_METRICS_CONTENT_H_
#define LDQ_METRICS_CONTENT_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ldq/metrics/result.h"
#include "ldq/rdf/closure.h"
#include "ldq/rdf/graph.h"
#include "ldq/rdf/schema.h"

namespace ldq {

enum class ConflictRuleKind {
  kFunctionalProperty,      // params: {property}
  kDisjointClasses,         // params: {class, class}; equal classes mean unsatisfiable
  kContradictionPredicate,  // params: {predicate, contradicting predicate}
  kDatatypeViolation,       // params: {} (every validated datatype)
};

std::string_view ConflictRuleKindName(ConflictRuleKind kind);
std::optional<ConflictRuleKind> ParseConflictRuleKind(std::string_view name);

struct ConflictRule {
  ConflictRuleKind kind = ConflictRuleKind::kDatatypeViolation;
  std::vector<Term> params;

  friend auto operator<=>(const ConflictRule&, const ConflictRule&) = default;
  friend bool operator==(const ConflictRule&, const ConflictRule&) = default;
};

std::string Describe(const ConflictRule& rule);

// One functional-property rule per declared functional property, one
// disjointness rule per declared pair, owl:sameAs against owl:differentFrom,
// and the datatype rule, minus any kind in `disabled`.
std::vector<ConflictRule> DefaultRules(const SchemaSpec& schema,
                                       const std::set<ConflictRuleKind>& disabled = {});

// A pair of closure triples violating `rule`, ordered first <= second. Unary
// violations (datatype, a class disjoint with itself) repeat the triple.
struct Conflict {
  Triple first;
  Triple second;
  ConflictRule rule;

  friend auto operator<=>(const Conflict&, const Conflict&) = default;
  friend bool operator==(const Conflict&, const Conflict&) = default;
};

// True when `lexical` is a valid lexical form of `datatype`. Datatypes
// without a validator accept anything.
bool IsValidLexicalForm(std::string_view lexical, std::string_view datatype);
bool HasLexicalValidator(std::string_view datatype);

// Conflicts of a graph under a rule set, computed once over the RDFS
// closure. Every closure triple remembers which graph triples entail it, so
// a graph triple is contaminated when it entails either side of a conflict.
class ConflictAnalysis {
 public:
  ConflictAnalysis(const Graph& graph, const SchemaSpec& schema,
                   const std::vector<ConflictRule>& rules);

  // Sorted and duplicate-free.
  const std::vector<Conflict>& conflicts() const { return conflicts_; }
  bool consistent() const { return conflicts_.empty(); }

  // `t` must be a triple of the analysed graph.
  bool IsContaminated(const Triple& t) const { return contaminated_.contains(t); }
  std::size_t contaminated_count() const { return contaminated_.size(); }
  // Graph triples in graph order that take part in some conflict.
  std::vector<Triple> ContaminatedTriples() const;

  const Graph& graph() const { return *graph_; }
  const Graph& closure() const { return closure_; }

 private:
  void Detect(const std::vector<ConflictRule>& rules);
  void Report(const Triple& a, const Triple& b, const ConflictRule& rule);

  const Graph* graph_;
  Graph closure_;
  std::unordered_map<Triple, std::vector<const Triple*>> origins_;
  std::vector<Conflict> conflicts_;
  std::unordered_set<Triple> contaminated_;
};

// Conflicting triples of `graph` against itself, as a set result.
MetricResult ConflictSet(const ConflictAnalysis& analysis);

// True iff {t1, t2} together with the schema triggers no rule.
bool ConsistencyOfStatementWrt(const Triple& t1, const Triple& t2, const SchemaSpec& schema,
                               const std::vector<ConflictRule>& rules);
// Consistent, distinct, and neither entailed by the other.
bool ConsistencyAndNonRedundancyOfStatementWrt(const Triple& t1, const Triple& t2,
                                               const SchemaSpec& schema,
                                               const std::vector<ConflictRule>& rules);

// Whole-graph consistency: no rule fires on the closure.
MetricResult KbConsistency(const ConflictAnalysis& analysis);

// |{t in graph : pattern matches t and t is uncontaminated}| / |graph|.
// Throws kEmptyTarget on an empty graph.
MetricResult ConsistencyRatioPattern(const ConflictAnalysis& analysis,
                                     const TriplePattern& pattern);
MetricResult ConsistencyRatioAll(const ConflictAnalysis& analysis);
// Restricted to the frame of `term`; throws kEmptyTarget for an empty frame.
MetricResult ConsistencyRatioOfTerm(const ConflictAnalysis& analysis, const Term& term);
// Restricted to the triples of `term` with `predicate`.
MetricResult ConsistencyRatioOfRelationOnTerm(const ConflictAnalysis& analysis,
                                              const Term& predicate, const Term& term);
// Non-conflicting frames / frames.
MetricResult PdConsistency(const ConflictAnalysis& analysis);

// Coverage is the share of typed instances carrying every required property
// of their classes, with the covered count in components["count"].
// Coherence is the mean per-instance share of required properties present.
// Both run over the closure and throw kEmptyTarget when no instance of a
// class with required properties exists.
MetricResult Coverage(const Graph& closure, const SchemaSpec& schema);
MetricResult Coherence(const Graph& closure, const SchemaSpec& schema);

MetricResult IntensionalCompleteness(const Graph& closure, const SchemaSpec& schema);
MetricResult ExtensionalCompleteness(const Graph& closure, const SchemaSpec& schema);
MetricResult LdsCompleteness(const Graph& graph, const Term& property);

MetricResult TypingRatio(const Graph& graph);

// Well-formed http(s) IRIs among the distinct IRIs of the graph.
bool IsWellFormedHttpIri(std::string_view iri);
MetricResult UriQuality(const Graph& graph);

// Namespace of an IRI: everything up to and including its last '#' or '/'.
std::string NamespaceOf(std::string_view iri);
// Namespaces of the graph's IRI subjects, used when none are configured.
std::set<std::string> InferNamespaces(const Graph& graph);
bool InNamespaces(std::string_view iri, const std::set<std::string>& namespaces);

const std::vector<std::string>& LabelProperties();
MetricResult LabelsRatio(const Graph& graph, const std::set<std::string>& local_namespaces);
MetricResult LanguageTagRatio(const Graph& graph);

// Default naming conventions: non-empty, starts with a letter, only ASCII
// letters, digits and '_', no empty '_' segment, and the last word (split
// at '_', lower-to-upper and letter-to-digit boundaries) is not all digits.
bool FollowsNamingConventions(std::string_view local_name);
// Distinct local names of predicates and rdf:type objects outside the
// rdf, rdfs, owl and xsd namespaces.
std::set<std::string> NamedTerms(const Graph& graph);
MetricResult NamingConventionRatio(const Graph& graph);

struct LinkStats {
  std::size_t out_relation_count = 0;
  std::size_t external_link_count = 0;
  double external_ratio = 0.0;
  std::vector<Triple> external;
};
LinkStats ComputeLinkStats(const Graph& graph, const std::set<std::string>& local_namespaces);
// `field` is out_relation_count, external_link_count or external_ratio.
MetricResult LinkStatsResult(const LinkStats& stats, std::string_view field);

// Non-redundant triples / triples, where t is redundant iff another graph
// triple entails it.
MetricResult RedundancyRatio(const Graph& graph, const SchemaSpec& schema);

const std::vector<std::string>& AttributionProperties();
const std::vector<std::string>& HistoryProperties();
struct ProvenanceCheck {
  bool attribution = false;
  bool history = false;
  std::vector<Triple> attribution_evidence;
  std::vector<Triple> history_evidence;
};
ProvenanceCheck CheckProvenance(const Dataset& dataset);
// `field` is attribution or history.
MetricResult ProvenanceResult(const ProvenanceCheck& check, std::string_view field);

// Triples matching some pattern / triples. Throws kEmptyTarget when either
// the graph or the pattern list is empty.
MetricResult RelevancyRatio(const Graph& graph, const std::vector<TriplePattern>& patterns);

}  // namespace ldq

#endif  // LDQ_METRICS_CONTENT_H_
