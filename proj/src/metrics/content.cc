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

#include "ldq/metrics/content.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "ldq/error.h"
#include "ldq/rdf/vocab.h"

namespace ldq {
namespace {

constexpr std::string_view kConsistencyMode = "pattern-instantiation; bounded-rdfs rule conflicts";

const Term& RdfType() {
  static const Term type = Term::Iri(std::string(vocab::kRdfType));
  return type;
}

Term Iri(std::string_view iri) { return Term::Iri(std::string(iri)); }

}  // namespace

std::string_view ConflictRuleKindName(ConflictRuleKind kind) {
  switch (kind) {
    case ConflictRuleKind::kFunctionalProperty: return "functional-property";
    case ConflictRuleKind::kDisjointClasses: return "disjoint-classes";
    case ConflictRuleKind::kContradictionPredicate: return "contradiction-predicate";
    case ConflictRuleKind::kDatatypeViolation: return "datatype-violation";
  }
  return "datatype-violation";
}

std::optional<ConflictRuleKind> ParseConflictRuleKind(std::string_view name) {
  for (ConflictRuleKind k :
       {ConflictRuleKind::kFunctionalProperty, ConflictRuleKind::kDisjointClasses,
        ConflictRuleKind::kContradictionPredicate, ConflictRuleKind::kDatatypeViolation}) {
    if (ConflictRuleKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string Describe(const ConflictRule& rule) {
  std::string out(ConflictRuleKindName(rule.kind));
  for (const Term& p : rule.params) out += " " + ToNTriples(p);
  return out;
}

std::vector<ConflictRule> DefaultRules(const SchemaSpec& schema,
                                       const std::set<ConflictRuleKind>& disabled) {
  std::vector<ConflictRule> rules;
  auto enabled = [&](ConflictRuleKind k) { return !disabled.contains(k); };
  if (enabled(ConflictRuleKind::kFunctionalProperty)) {
    for (const Term& p : schema.functional_properties) {
      rules.push_back({ConflictRuleKind::kFunctionalProperty, {p}});
    }
  }
  if (enabled(ConflictRuleKind::kDisjointClasses)) {
    for (const auto& [a, b] : schema.disjoint_classes) {
      rules.push_back({ConflictRuleKind::kDisjointClasses, {a, b}});
    }
  }
  if (enabled(ConflictRuleKind::kContradictionPredicate)) {
    rules.push_back({ConflictRuleKind::kContradictionPredicate,
                     {Iri(vocab::kOwlSameAs), Iri(vocab::kOwlDifferentFrom)}});
  }
  if (enabled(ConflictRuleKind::kDatatypeViolation)) {
    rules.push_back({ConflictRuleKind::kDatatypeViolation, {}});
  }
  return rules;
}

ConflictAnalysis::ConflictAnalysis(const Graph& graph, const SchemaSpec& schema,
                                   const std::vector<ConflictRule>& rules)
    : graph_(&graph) {
  Entailment entailment(schema);
  origins_.reserve(graph.size());
  for (const Triple& t : graph) {
    if (entailment.trivial()) {
      closure_.Insert(t);
      origins_[t].push_back(&t);
      continue;
    }
    for (Triple& c : entailment.Consequences(t)) {
      origins_[c].push_back(&t);
      closure_.Insert(std::move(c));
    }
  }
  Detect(rules);
  std::sort(conflicts_.begin(), conflicts_.end());
  conflicts_.erase(std::unique(conflicts_.begin(), conflicts_.end()), conflicts_.end());
}

void ConflictAnalysis::Report(const Triple& a, const Triple& b, const ConflictRule& rule) {
  const Triple& lo = b < a ? b : a;
  const Triple& hi = b < a ? a : b;
  conflicts_.push_back({lo, hi, rule});
  for (const Triple* side : {&a, &b}) {
    for (const Triple* origin : origins_.at(*side)) contaminated_.insert(*origin);
  }
}

void ConflictAnalysis::Detect(const std::vector<ConflictRule>& rules) {
  for (const ConflictRule& rule : rules) {
    switch (rule.kind) {
      case ConflictRuleKind::kFunctionalProperty: {
        if (rule.params.size() != 1) {
          throw Error(ErrorCode::kConfiguration, "functional-property rule takes one property");
        }
        std::map<Term, std::vector<const Triple*>> by_subject;
        for (const Triple& t : closure_.WithPredicate(rule.params[0])) {
          by_subject[t.subject()].push_back(&t);
        }
        for (const auto& [subject, triples] : by_subject) {
          for (std::size_t i = 0; i < triples.size(); ++i) {
            for (std::size_t j = i + 1; j < triples.size(); ++j) {
              if (triples[i]->object() != triples[j]->object()) {
                Report(*triples[i], *triples[j], rule);
              }
            }
          }
        }
        break;
      }
      case ConflictRuleKind::kDisjointClasses: {
        if (rule.params.size() != 2) {
          throw Error(ErrorCode::kConfiguration, "disjoint-classes rule takes two classes");
        }
        const Term& first = rule.params[0];
        const Term& second = rule.params[1];
        for (const Triple& t : closure_.WithObject(first)) {
          if (t.predicate() != RdfType()) continue;
          if (first == second) {
            Report(t, t, rule);
            continue;
          }
          Triple other(t.subject(), RdfType(), second);
          if (closure_.Contains(other)) Report(t, other, rule);
        }
        break;
      }
      case ConflictRuleKind::kContradictionPredicate: {
        if (rule.params.size() != 2) {
          throw Error(ErrorCode::kConfiguration,
                      "contradiction-predicate rule takes two predicates");
        }
        for (const Triple& t : closure_.WithPredicate(rule.params[0])) {
          Triple other(t.subject(), rule.params[1], t.object());
          if (closure_.Contains(other)) Report(t, other, rule);
        }
        break;
      }
      case ConflictRuleKind::kDatatypeViolation: {
        for (const Triple& t : closure_) {
          const Term& o = t.object();
          if (o.is_literal() && !IsValidLexicalForm(o.value(), o.datatype())) Report(t, t, rule);
        }
        break;
      }
    }
  }
}

std::vector<Triple> ConflictAnalysis::ContaminatedTriples() const {
  std::vector<Triple> out;
  for (const Triple& t : *graph_) {
    if (contaminated_.contains(t)) out.push_back(t);
  }
  return out;
}

MetricResult ConflictSet(const ConflictAnalysis& analysis) {
  std::vector<std::string> members;
  for (const Triple& t : analysis.ContaminatedTriples()) members.push_back(ToNTriples(t));
  MetricResult r = MetricResult::Set(std::move(members), analysis.graph().size());
  for (const Conflict& c : analysis.conflicts()) {
    r.AddEvidence(Describe(c.rule) + ": " + ToNTriples(c.first) +
                  (c.first == c.second ? "" : " / " + ToNTriples(c.second)));
  }
  r.mode = std::string(kConsistencyMode);
  return r;
}

bool ConsistencyOfStatementWrt(const Triple& t1, const Triple& t2, const SchemaSpec& schema,
                               const std::vector<ConflictRule>& rules) {
  Graph pair;
  pair.Insert(t1);
  pair.Insert(t2);
  return ConflictAnalysis(pair, schema, rules).consistent();
}

bool ConsistencyAndNonRedundancyOfStatementWrt(const Triple& t1, const Triple& t2,
                                               const SchemaSpec& schema,
                                               const std::vector<ConflictRule>& rules) {
  if (t1 == t2 || !ConsistencyOfStatementWrt(t1, t2, schema, rules)) return false;
  Entailment entailment(schema);
  auto entails = [&](const Triple& from, const Triple& to) {
    auto consequences = entailment.Consequences(from);
    return std::find(consequences.begin(), consequences.end(), to) != consequences.end();
  };
  return !entails(t1, t2) && !entails(t2, t1);
}

MetricResult KbConsistency(const ConflictAnalysis& analysis) {
  MetricResult r = MetricResult::Boolean(analysis.consistent());
  for (const Conflict& c : analysis.conflicts()) r.AddEvidence(Describe(c.rule));
  r.components["conflicts"] = static_cast<double>(analysis.conflicts().size());
  r.mode = std::string(kConsistencyMode);
  return r;
}

namespace {

// Share of `candidates` that are uncontaminated among `denominator` triples.
template <typename Range>
MetricResult UncontaminatedShare(const ConflictAnalysis& analysis, const Range& candidates,
                                 std::size_t denominator, const std::string& what) {
  std::size_t numerator = 0;
  std::vector<std::string> contaminated;
  for (const Triple& t : candidates) {
    if (analysis.IsContaminated(t)) {
      contaminated.push_back(ToNTriples(t));
    } else {
      ++numerator;
    }
  }
  MetricResult r = MetricResult::Ratio(numerator, denominator, what);
  for (std::string& e : contaminated) r.AddEvidence(std::move(e));
  r.mode = std::string(kConsistencyMode);
  return r;
}

}  // namespace

MetricResult ConsistencyRatioPattern(const ConflictAnalysis& analysis,
                                     const TriplePattern& pattern) {
  std::vector<Triple> matching = MatchPattern(analysis.graph(), pattern);
  return UncontaminatedShare(analysis, matching, analysis.graph().size(), "triples");
}

MetricResult ConsistencyRatioAll(const ConflictAnalysis& analysis) {
  return UncontaminatedShare(analysis, analysis.graph(), analysis.graph().size(), "triples");
}

MetricResult ConsistencyRatioOfTerm(const ConflictAnalysis& analysis, const Term& term) {
  Frame frame = FrameOf(analysis.graph(), term);
  return UncontaminatedShare(analysis, frame.triples, frame.triples.size(),
                             "triples in the frame of " + ToNTriples(term));
}

MetricResult ConsistencyRatioOfRelationOnTerm(const ConflictAnalysis& analysis,
                                              const Term& predicate, const Term& term) {
  std::vector<Triple> triples;
  for (const Triple& t : analysis.graph().WithSubject(term)) {
    if (t.predicate() == predicate) triples.push_back(t);
  }
  return UncontaminatedShare(analysis, triples, triples.size(),
                             ToNTriples(predicate) + " triples on " + ToNTriples(term));
}

MetricResult PdConsistency(const ConflictAnalysis& analysis) {
  const Graph& g = analysis.graph();
  std::size_t clean = 0;
  std::vector<std::string> conflicting;
  for (const Term& s : g.subjects()) {
    auto frame = g.WithSubject(s);
    bool bad = std::any_of(frame.begin(), frame.end(),
                           [&](const Triple& t) { return analysis.IsContaminated(t); });
    if (bad) {
      conflicting.push_back(ToNTriples(s));
    } else {
      ++clean;
    }
  }
  MetricResult r = MetricResult::Ratio(clean, g.subjects().size(), "frames");
  for (std::string& e : conflicting) r.AddEvidence(std::move(e));
  r.mode = std::string(kConsistencyMode);
  return r;
}

namespace {

struct InstanceRequirements {
  Term instance;
  std::set<Term> required;
};

// Typed instances of classes with required properties, in subject order.
std::vector<InstanceRequirements> RequiredInstances(const Graph& closure,
                                                    const SchemaSpec& schema) {
  std::vector<InstanceRequirements> out;
  for (const Term& s : closure.subjects()) {
    std::set<Term> required;
    for (const Triple& t : closure.WithSubject(s)) {
      if (t.predicate() != RdfType()) continue;
      auto it = schema.required_properties.find(t.object());
      if (it != schema.required_properties.end()) required.insert(it->second.begin(), it->second.end());
    }
    if (!required.empty()) out.push_back({s, std::move(required)});
  }
  return out;
}

std::size_t PresentCount(const Graph& closure, const InstanceRequirements& inst) {
  std::set<Term> used;
  for (const Triple& t : closure.WithSubject(inst.instance)) used.insert(t.predicate());
  return static_cast<std::size_t>(std::count_if(inst.required.begin(), inst.required.end(),
                                                [&](const Term& p) { return used.contains(p); }));
}

}  // namespace

MetricResult Coverage(const Graph& closure, const SchemaSpec& schema) {
  auto instances = RequiredInstances(closure, schema);
  std::size_t covered = 0;
  MetricResult partial;
  for (const auto& inst : instances) {
    if (PresentCount(closure, inst) == inst.required.size()) {
      ++covered;
    } else {
      partial.AddEvidence(ToNTriples(inst.instance));
    }
  }
  MetricResult r = MetricResult::Ratio(covered, instances.size(), "instances of required classes");
  r.components["count"] = static_cast<double>(covered);
  r.components["instances"] = static_cast<double>(instances.size());
  r.evidence = std::move(partial.evidence);
  r.evidence_count = partial.evidence_count;
  return r;
}

MetricResult Coherence(const Graph& closure, const SchemaSpec& schema) {
  auto instances = RequiredInstances(closure, schema);
  if (instances.empty()) {
    throw Error(ErrorCode::kEmptyTarget, "no instances of required classes to measure");
  }
  double sum = 0.0;
  for (const auto& inst : instances) {
    sum += static_cast<double>(PresentCount(closure, inst)) /
           static_cast<double>(inst.required.size());
  }
  MetricResult r = MetricResult::Score(sum / static_cast<double>(instances.size()));
  r.kind = ResultKind::kRatio;
  r.components["instances"] = static_cast<double>(instances.size());
  return r;
}

MetricResult IntensionalCompleteness(const Graph& closure, const SchemaSpec& schema) {
  std::set<Term> required;
  for (const auto& [cls, props] : schema.required_properties) required.insert(props.begin(), props.end());
  std::size_t used = 0;
  MetricResult missing;
  for (const Term& p : required) {
    if (closure.WithPredicate(p).empty()) {
      missing.AddEvidence(ToNTriples(p));
    } else {
      ++used;
    }
  }
  MetricResult r = MetricResult::Ratio(used, required.size(), "required properties");
  r.evidence = std::move(missing.evidence);
  r.evidence_count = missing.evidence_count;
  return r;
}

MetricResult ExtensionalCompleteness(const Graph& closure, const SchemaSpec& schema) {
  std::size_t present = 0;
  MetricResult missing;
  for (const Term& term : schema.required_terms) {
    bool occurs = closure.HasSubject(term) || !closure.WithPredicate(term).empty() ||
                  !closure.WithObject(term).empty();
    if (occurs) {
      ++present;
    } else {
      missing.AddEvidence(ToNTriples(term));
    }
  }
  MetricResult r = MetricResult::Ratio(present, schema.required_terms.size(), "required terms");
  r.evidence = std::move(missing.evidence);
  r.evidence_count = missing.evidence_count;
  return r;
}

MetricResult LdsCompleteness(const Graph& graph, const Term& property) {
  std::size_t bearing = 0;
  MetricResult lacking;
  for (const Term& s : graph.subjects()) {
    auto frame = graph.WithSubject(s);
    if (std::any_of(frame.begin(), frame.end(),
                    [&](const Triple& t) { return t.predicate() == property; })) {
      ++bearing;
    } else {
      lacking.AddEvidence(ToNTriples(s));
    }
  }
  MetricResult r = MetricResult::Ratio(bearing, graph.subjects().size(), "subjects");
  r.evidence = std::move(lacking.evidence);
  r.evidence_count = lacking.evidence_count;
  r.mode = "property " + ToNTriples(property);
  return r;
}

MetricResult TypingRatio(const Graph& graph) {
  std::size_t typed = 0;
  MetricResult untyped;
  for (const Term& s : graph.subjects()) {
    auto frame = graph.WithSubject(s);
    if (std::any_of(frame.begin(), frame.end(),
                    [](const Triple& t) { return t.predicate() == RdfType(); })) {
      ++typed;
    } else {
      untyped.AddEvidence(ToNTriples(s));
    }
  }
  MetricResult r = MetricResult::Ratio(typed, graph.subjects().size(), "subjects");
  r.evidence = std::move(untyped.evidence);
  r.evidence_count = untyped.evidence_count;
  return r;
}

bool IsWellFormedHttpIri(std::string_view iri) {
  std::size_t colon = iri.find("://");
  if (colon == std::string_view::npos) return false;
  std::string scheme(iri.substr(0, colon));
  std::transform(scheme.begin(), scheme.end(), scheme.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (scheme != "http" && scheme != "https") return false;
  std::string_view rest = iri.substr(colon + 3);
  std::size_t host_end = rest.find_first_of("/?#");
  if (rest.substr(0, host_end).empty()) return false;
  return std::none_of(iri.begin(), iri.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return u <= 0x20 || std::string_view("<>\"{}|\\^`").find(c) != std::string_view::npos;
  });
}

MetricResult UriQuality(const Graph& graph) {
  std::set<std::string> iris;
  for (const Triple& t : graph) {
    for (const Term* term : {&t.subject(), &t.predicate(), &t.object()}) {
      if (term->is_iri()) iris.insert(term->value());
    }
  }
  std::size_t good = 0;
  MetricResult bad;
  for (const std::string& iri : iris) {
    if (IsWellFormedHttpIri(iri)) {
      ++good;
    } else {
      bad.AddEvidence("<" + iri + ">");
    }
  }
  MetricResult r = MetricResult::Ratio(good, iris.size(), "IRIs");
  r.evidence = std::move(bad.evidence);
  r.evidence_count = bad.evidence_count;
  r.mode = "static";
  return r;
}

std::string NamespaceOf(std::string_view iri) {
  std::size_t authority = iri.find("://");
  authority = authority == std::string_view::npos ? 0 : authority + 3;
  std::size_t pos = iri.find_last_of("#/");
  if (pos != std::string_view::npos && pos >= authority) return std::string(iri.substr(0, pos + 1));
  if (authority > 0) return std::string(iri) + "/";
  std::size_t colon = iri.find_last_of(':');
  return std::string(iri.substr(0, colon == std::string_view::npos ? 0 : colon + 1));
}

std::set<std::string> InferNamespaces(const Graph& graph) {
  std::set<std::string> out;
  for (const Term& s : graph.subjects()) {
    if (s.is_iri()) out.insert(NamespaceOf(s.value()));
  }
  return out;
}

bool InNamespaces(std::string_view iri, const std::set<std::string>& namespaces) {
  return std::any_of(namespaces.begin(), namespaces.end(),
                     [&](const std::string& ns) { return iri.starts_with(ns); });
}

const std::vector<std::string>& LabelProperties() {
  static const std::vector<std::string> kProperties = {
      std::string(vocab::kRdfsLabel),
      std::string(vocab::kSkos) + "prefLabel",
      std::string(vocab::kSkos) + "altLabel",
      std::string(vocab::kDcterms) + "title",
      std::string(vocab::kFoaf) + "name",
      std::string(vocab::kSchema) + "name",
  };
  return kProperties;
}

MetricResult LabelsRatio(const Graph& graph, const std::set<std::string>& local_namespaces) {
  const std::set<std::string> namespaces =
      local_namespaces.empty() ? InferNamespaces(graph) : local_namespaces;
  std::set<std::string> label_properties(LabelProperties().begin(), LabelProperties().end());
  std::size_t local = 0;
  std::size_t labeled = 0;
  MetricResult unlabeled;
  for (const Term& s : graph.subjects()) {
    if (!s.is_iri() || !InNamespaces(s.value(), namespaces)) continue;
    ++local;
    auto frame = graph.WithSubject(s);
    if (std::any_of(frame.begin(), frame.end(), [&](const Triple& t) {
          return label_properties.contains(t.predicate().value());
        })) {
      ++labeled;
    } else {
      unlabeled.AddEvidence(ToNTriples(s));
    }
  }
  MetricResult r = MetricResult::Ratio(labeled, local, "locally defined subjects");
  r.evidence = std::move(unlabeled.evidence);
  r.evidence_count = unlabeled.evidence_count;
  return r;
}

MetricResult LanguageTagRatio(const Graph& graph) {
  std::size_t plain = 0;
  std::size_t tagged = 0;
  MetricResult untagged;
  for (const Triple& t : graph) {
    const Term& o = t.object();
    if (!o.is_literal()) continue;
    if (o.datatype() == vocab::kRdfLangString) {
      ++plain;
      ++tagged;
    } else if (o.datatype() == vocab::kXsdString) {
      ++plain;
      untagged.AddEvidence(ToNTriples(t));
    }
  }
  MetricResult r = MetricResult::Ratio(tagged, plain, "plain literals");
  r.evidence = std::move(untagged.evidence);
  r.evidence_count = untagged.evidence_count;
  return r;
}

bool FollowsNamingConventions(std::string_view name) {
  auto is_upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  auto is_lower = [](char c) { return c >= 'a' && c <= 'z'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_letter = [&](char c) { return is_upper(c) || is_lower(c); };
  if (name.empty() || !is_letter(name.front())) return false;
  if (!std::all_of(name.begin(), name.end(),
                   [&](char c) { return is_letter(c) || is_digit(c) || c == '_'; })) {
    return false;
  }
  if (name.back() == '_' || name.find("__") != std::string_view::npos) return false;
  // The last word starts after the last '_', lower-to-upper or
  // letter-to-digit boundary.
  std::size_t start = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    char prev = name[i - 1];
    char c = name[i];
    if (prev == '_' || (is_lower(prev) && is_upper(c)) || (is_letter(prev) && is_digit(c)) ||
        (is_digit(prev) && is_letter(c))) {
      start = i;
    }
  }
  std::string_view last = name.substr(start);
  return !std::all_of(last.begin(), last.end(), is_digit);
}

std::set<std::string> NamedTerms(const Graph& graph) {
  auto skipped = [](std::string_view iri) {
    return iri.starts_with(vocab::kRdf) || iri.starts_with(vocab::kRdfs) ||
           iri.starts_with(vocab::kOwl) || iri.starts_with(vocab::kXsd);
  };
  std::set<std::string> names;
  for (const Triple& t : graph) {
    if (!skipped(t.predicate().value())) names.emplace(LocalName(t.predicate().value()));
    if (t.predicate() == RdfType() && t.object().is_iri() && !skipped(t.object().value())) {
      names.emplace(LocalName(t.object().value()));
    }
  }
  return names;
}

MetricResult NamingConventionRatio(const Graph& graph) {
  std::set<std::string> names = NamedTerms(graph);
  std::size_t passing = 0;
  MetricResult failing;
  for (const std::string& n : names) {
    if (FollowsNamingConventions(n)) {
      ++passing;
    } else {
      failing.AddEvidence(n);
    }
  }
  MetricResult r = MetricResult::Ratio(passing, names.size(), "local names");
  r.evidence = std::move(failing.evidence);
  r.evidence_count = failing.evidence_count;
  r.mode = "default conventions";
  return r;
}

LinkStats ComputeLinkStats(const Graph& graph, const std::set<std::string>& local_namespaces) {
  const std::set<std::string> namespaces =
      local_namespaces.empty() ? InferNamespaces(graph) : local_namespaces;
  LinkStats stats;
  stats.out_relation_count = graph.size();
  for (const Triple& t : graph) {
    if (t.object().is_iri() && !InNamespaces(t.object().value(), namespaces)) {
      stats.external.push_back(t);
    }
  }
  stats.external_link_count = stats.external.size();
  stats.external_ratio = graph.empty() ? 0.0
                                       : static_cast<double>(stats.external_link_count) /
                                             static_cast<double>(graph.size());
  return stats;
}

MetricResult LinkStatsResult(const LinkStats& stats, std::string_view field) {
  MetricResult r;
  if (field == "out_relation_count") {
    r = MetricResult::Count(stats.out_relation_count);
  } else if (field == "external_link_count") {
    r = MetricResult::Count(stats.external_link_count);
  } else if (field == "external_ratio") {
    r = MetricResult::Score(stats.external_ratio);
    r.kind = ResultKind::kRatio;
  } else {
    throw Error(ErrorCode::kConfiguration, "link_stats has no field " + std::string(field));
  }
  r.components["out_relation_count"] = static_cast<double>(stats.out_relation_count);
  r.components["external_link_count"] = static_cast<double>(stats.external_link_count);
  r.components["external_ratio"] = stats.external_ratio;
  for (const Triple& t : stats.external) r.AddEvidence(ToNTriples(t));
  return r;
}

MetricResult RedundancyRatio(const Graph& graph, const SchemaSpec& schema) {
  Entailment entailment(schema);
  std::unordered_set<Triple> redundant;
  if (!entailment.trivial()) {
    for (const Triple& t : graph) {
      for (const Triple& c : entailment.Consequences(t)) {
        if (c != t && graph.Contains(c)) redundant.insert(c);
      }
    }
  }
  MetricResult r = MetricResult::Ratio(graph.size() - redundant.size(), graph.size(), "triples");
  for (const Triple& t : graph) {
    if (redundant.contains(t)) r.AddEvidence(ToNTriples(t));
  }
  r.mode = "bounded-rdfs rederivation";
  return r;
}

const std::vector<std::string>& AttributionProperties() {
  static const std::vector<std::string> kProperties = [] {
    std::vector<std::string> out;
    for (std::string_view ns : {vocab::kDcterms, vocab::kDc}) {
      for (const char* local : {"creator", "publisher", "source", "contributor"}) {
        out.push_back(std::string(ns) + local);
      }
    }
    out.push_back(std::string(vocab::kProv) + "wasAttributedTo");
    out.push_back(std::string(vocab::kProv) + "wasDerivedFrom");
    return out;
  }();
  return kProperties;
}

const std::vector<std::string>& HistoryProperties() {
  static const std::vector<std::string> kProperties = {
      std::string(vocab::kDcterms) + "created",  std::string(vocab::kDcterms) + "modified",
      std::string(vocab::kDcterms) + "issued",   std::string(vocab::kDcterms) + "date",
      std::string(vocab::kDc) + "date",          std::string(vocab::kProv) + "generatedAtTime",
  };
  return kProperties;
}

namespace {

bool IsDateValued(const Term& o) {
  if (!o.is_literal()) return false;
  const std::string xsd(vocab::kXsd);
  for (const char* local : {"date", "dateTime", "gYear", "gYearMonth", "dateTimeStamp"}) {
    if (o.datatype() == xsd + local) return IsValidLexicalForm(o.value(), o.datatype());
  }
  if (o.datatype() != vocab::kXsdString) return false;
  return IsValidLexicalForm(o.value().substr(0, 10), vocab::kXsdDate);
}

}  // namespace

ProvenanceCheck CheckProvenance(const Dataset& dataset) {
  std::set<std::string> attribution(AttributionProperties().begin(),
                                    AttributionProperties().end());
  std::set<std::string> history(HistoryProperties().begin(), HistoryProperties().end());
  ProvenanceCheck check;
  auto scan = [&](const Graph& g) {
    for (const Triple& t : g) {
      const std::string& p = t.predicate().value();
      if (attribution.contains(p)) check.attribution_evidence.push_back(t);
      if (history.contains(p) && IsDateValued(t.object())) check.history_evidence.push_back(t);
    }
  };
  scan(dataset.default_graph);
  for (const auto& [name, g] : dataset.named_graphs) scan(g);
  check.attribution = !check.attribution_evidence.empty();
  check.history = !check.history_evidence.empty();
  return check;
}

MetricResult ProvenanceResult(const ProvenanceCheck& check, std::string_view field) {
  MetricResult r;
  const std::vector<Triple>* evidence = nullptr;
  if (field == "attribution") {
    r = MetricResult::Boolean(check.attribution);
    evidence = &check.attribution_evidence;
  } else if (field == "history") {
    r = MetricResult::Boolean(check.history);
    evidence = &check.history_evidence;
  } else {
    throw Error(ErrorCode::kConfiguration, "provenance_check has no field " + std::string(field));
  }
  r.components["attribution"] = check.attribution ? 1.0 : 0.0;
  r.components["history"] = check.history ? 1.0 : 0.0;
  for (const Triple& t : *evidence) r.AddEvidence(ToNTriples(t));
  return r;
}

MetricResult RelevancyRatio(const Graph& graph, const std::vector<TriplePattern>& patterns) {
  if (patterns.empty()) throw Error(ErrorCode::kEmptyTarget, "no relevance patterns configured");
  std::size_t relevant = 0;
  for (const Triple& t : graph) {
    if (std::any_of(patterns.begin(), patterns.end(),
                    [&](const TriplePattern& p) { return p.Matches(t); })) {
      ++relevant;
    }
  }
  MetricResult r = MetricResult::Ratio(relevant, graph.size(), "triples");
  r.components["patterns"] = static_cast<double>(patterns.size());
  return r;
}

}  // namespace ldq
