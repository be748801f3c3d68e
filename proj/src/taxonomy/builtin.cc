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

// Built-in quality-function taxonomy. Each entry lists its parents in figure
// order; the first parent is the one the hierarchy is drawn under, later ones
// integrate external categorizations. Entries marked provisional carry links
// the source categorizations imply but do not spell out.

#include <deque>
#include <initializer_list>

#include "ldq/error.h"
#include "ldq/taxonomy/taxonomy.h"

namespace ldq {
namespace {

using RK = ResultKind;

std::string LabelOf(std::string_view id) {
  std::size_t colon = id.find(':');
  std::string label(id.substr(colon == std::string_view::npos ? 0 : colon + 1));
  for (char& c : label) {
    if (c == '_') c = ' ';
  }
  return label;
}

class NodeRef {
 public:
  explicit NodeRef(MetricCategory& c) : c_(c) {}
  NodeRef& Sig(std::initializer_list<const char*> types) {
    for (const char* t : types) c_.signature.emplace_back(t);
    return *this;
  }
  NodeRef& Eval(std::string operation, std::string parameter = "") {
    c_.evaluator = EvaluatorBinding{std::move(operation), std::move(parameter), false, {}};
    return *this;
  }
  // Bound operation that needs caller-chosen arguments.
  NodeRef& EvalWithArguments(std::string operation) {
    c_.evaluator = EvaluatorBinding{std::move(operation), "", true, {}};
    return *this;
  }
  NodeRef& Aux(std::string operation) {
    c_.evaluator->auxiliary.push_back(std::move(operation));
    return *this;
  }
  NodeRef& Provisional() {
    c_.provisional = true;
    return *this;
  }

 private:
  MetricCategory& c_;
};

class Builder {
 public:
  NodeRef Node(std::string id, std::initializer_list<const char*> parents, RK result,
               std::string note) {
    MetricCategory& c = pending_.emplace_back();
    c.label = LabelOf(id);
    c.source = SourceOfId(id);
    c.id = std::move(id);
    for (const char* p : parents) c.parents.emplace_back(p);
    c.result_kind = result;
    c.note = std::move(note);
    if (c.source == Source::kLDpattern || c.source == Source::kODP) {
      c.kind = CategoryKind::kPattern;
    }
    return NodeRef(c);
  }

  // Category from an external quality-criteria list.
  NodeRef Dimension(std::string id, std::initializer_list<const char*> parents,
                    std::string note) {
    NodeRef ref = Node(std::move(id), parents, RK::kNone, std::move(note));
    pending_.back().kind = CategoryKind::kDimension;
    return ref;
  }

  // Best-practice pattern from a pattern catalogue.
  NodeRef Pattern(std::string id, std::initializer_list<const char*> parents, std::string note) {
    return Node(std::move(id), parents, RK::kNone, std::move(note));
  }

  void Alias(const char* alias, const char* canonical) { aliases_.emplace_back(alias, canonical); }

  TaxonomyGraph Build() {
    TaxonomyGraph graph;
    graph.set_version("ldq-taxonomy/1");
    for (MetricCategory& c : pending_) graph.Add(std::move(c));
    for (auto& [alias, canonical] : aliases_) graph.AddAlias(alias, canonical);
    return graph;
  }

 private:
  std::deque<MetricCategory> pending_;
  std::vector<std::pair<std::string, std::string>> aliases_;
};

void AddTopLevel(Builder& b) {
  b.Node("pm:quality", {}, RK::kScore,
         "Function on an evaluated object, possibly with further arguments, returning a "
         "numerical, boolean or other value. Root of every quality-function type.");
  b.Node("pm:content_based_quality", {"pm:quality"}, RK::kScore,
         "Quality computed at least from the content of the evaluated object.");
  b.Node("pm:meta-statement_based_quality", {"pm:quality"}, RK::kScore,
         "Quality computed from meta-statements about the object. Declared-only: assessments "
         "do not ingest a meta-statement (context) model.");
  b.Node("pm:rating_based_quality", {"pm:quality"}, RK::kScore,
         "Quality computed at least from ratings of the object. Declared-only: no rating or "
         "trust data is ingested.");
  b.Node("pm:description-content_quality", {"pm:content_based_quality"}, RK::kScore,
         "Quality of description-content objects: conceptual categories and the terms and "
         "statements that refer to or define them.");
  b.Node("pm:description-medium_quality", {"pm:content_based_quality"}, RK::kScore,
         "Quality of description-medium objects: the concrete notations and formats that "
         "present description content.");
  b.Node("pm:description-container_quality", {"pm:content_based_quality"}, RK::kScore,
         "Quality of description-container objects: files, repositories and servers that "
         "store, publish and serve descriptions.");
  b.Alias("pm:description_content_quality", "pm:description-content_quality");
  b.Alias("pm:description_medium_quality", "pm:description-medium_quality");
  b.Alias("pm:description_container_quality", "pm:description-container_quality");
}

void AddContentAggregations(Builder& b) {
  const char* kBranch = "pm:description-content_quality";
  b.Node("pm:quality_of_this_descr_content", {kBranch}, RK::kScore,
         "Evaluates the source content on all its criteria, by aggregation.");
  b.Node("pm:descr_content_quality_of_this_descr_content", {kBranch}, RK::kScore,
         "Content-related aggregations. Declared-only.");
  b.Node("pm:quality_of_descr_media_related_to_this_descr_content", {kBranch}, RK::kScore,
         "Quality of the media a content may be presented in. Declared-only.");
  b.Node("pm:quality_of_descr_containers_related_to_this_descr_content", {kBranch}, RK::kScore,
         "Quality of the containers a content may be stored in. Declared-only.");
}

void AddCorrectness(Builder& b) {
  const char* kBranch = "pm:description-content_quality";
  b.Node("pm:correctness", {kBranch}, RK::kScore,
         "Correctness of the evaluated statement or term: accuracy and consistency.");
  b.Node("LD:accuracy", {"pm:correctness", "Kahn:Accuracy"}, RK::kBoolean,
         "Factual correctness of a belief with respect to the world. Declared-only: world truth "
         "is not computable from the data.");
  b.Node("pm:consistency", {"pm:correctness", "Kahn:Consistency"}, RK::kScore,
         "Reports all or some inconsistencies and implicit contradictions. The built-in rule "
         "set (functional property, disjoint classes, contradiction predicates, datatype "
         "lexical forms) realizes the 'some'.");
  b.Node("pm:consistency_of_this_statement_wrt_this_one", {"pm:consistency"}, RK::kBoolean,
         "True iff the two statements, together with the schema, trigger no conflict rule. "
         "Derivable relation: pm:statement_consistent_with_this_one.")
      .Sig({"ST", "ST"})
      .EvalWithArguments("consistency_of_statement_wrt");
  b.Node("pm:consistency_and_non-redundancy_of_this_statement_wrt_this_one",
         {"pm:consistency_of_this_statement_wrt_this_one"}, RK::kBoolean,
         "Consistent, and neither statement is entailed by the other under the bounded RDFS "
         "rules. Its concept view names statements consistent and non-redundant with every "
         "other statement of the KB.")
      .Sig({"ST", "ST"})
      .EvalWithArguments("consistency_and_non_redundancy_of_statement_wrt");
  b.Node("pm:consistency_of_this_KB", {"pm:consistency"}, RK::kBoolean,
         "True iff the whole KB triggers no conflict rule.")
      .Sig({"ST"});
  b.Node("pm:consistency_of_the_RDF_KB", {"pm:consistency_of_this_KB"}, RK::kBoolean,
         "KB consistency for an RDF KB: no conflict rule fires on its RDFS closure.")
      .Sig({"ST"})
      .Eval("kb_consistency");
  b.Node("pm:consistency_of_SKOS_relations", {"pm:consistency_of_the_RDF_KB"}, RK::kBoolean,
         "Consistency of SKOS relations; SKOS-specific criteria specialize it. Declared-only.");
  b.Node("pm:consistency_of_a_RDF_KB_tested_via_a_SPARQL_query", {"pm:consistency_of_the_RDF_KB"},
         RK::kBoolean,
         "Consistency checks written as SPARQL queries or SPIN rules. Declared-only: SPARQL "
         "evaluation is out of scope.");
  b.Node("LD:internal_consistency_fct", {"pm:consistency_of_this_KB", "SF:Content"}, RK::kBoolean,
         "Internal consistency of a dataset. Provisional: the sources leave open whether it is "
         "a dimension or a function, hence the _fct suffix. Declared-only.")
      .Provisional();
  b.Alias("SF:consistency_fct", "LD:internal_consistency_fct");
  b.Alias("SF:Consistency", "LD:internal_consistency_fct");
  b.Node("LD:modeling_correctness_fct", {"pm:consistency_of_this_KB"}, RK::kBoolean,
         "Correctness of the logical structure of the data. Provisional function reading of a "
         "source category. Declared-only.")
      .Provisional();
  b.Node("pm:substatements_of_this_1st_statement_that_are_inconsistent_with_this_2nd_statement",
         {"pm:consistency"}, RK::kSet,
         "Triples of the first statement taking part in a rule conflict with the second. Over a "
         "whole KB evaluated against itself it is the set of conflicting triples; fewer is "
         "better.")
      .Sig({"ST", "ST"})
      .Eval("conflicts");
  b.Node("pm:consistency_ratio", {"pm:consistency"}, RK::kRatio,
         "Any consistency function whose result is a ratio.");
  b.Node("pm:consistency_ratio_of_such_a_statement_in_this_statement", {"pm:consistency_ratio"},
         RK::kRatio,
         "Triples matching the given pattern and taking part in no conflict, divided by all "
         "triples. Pattern instantiation stands in for entailment of the first argument.")
      .Sig({"ST", "ST"})
      .EvalWithArguments("consistency_ratio_pattern");
  b.Node("pm:consistency_ratio_of_all_substatements_in_this_statement", {"pm:consistency_ratio"},
         RK::kRatio, "Fraction of the triples that take part in no conflict.")
      .Sig({"ST"})
      .Eval("consistency_ratio_all");
  b.Node("pm:consistency_ratio_of_this_KB", {"pm:consistency_ratio"}, RK::kRatio,
         "Consistency ratio of a whole KB; the fraction of its triples in no conflict.")
      .Sig({"ST"})
      .Eval("consistency_ratio_all");
  b.Node("pm:consistency_ratio_of_relations_on_this_term_in_this_statement",
         {"pm:consistency_ratio"}, RK::kRatio,
         "Fraction of the triples of one term's frame that take part in no conflict.")
      .Sig({"term"})
      .EvalWithArguments("consistency_ratio_of_term");
  b.Node("pm:consistency_ratio_of_this_relation_on_this_term_in_this_statement",
         {"pm:consistency_ratio"}, RK::kRatio,
         "Fraction of one term's triples with one predicate that take part in no conflict.")
      .Sig({"ST", "term"})
      .EvalWithArguments("consistency_ratio_of_relation_on_term");
  b.Node("PD:consistency", {"pm:consistency_ratio"}, RK::kRatio,
         "Frame-level consistency: the number of non-conflicting frames divided by the number "
         "of frames. A frame conflicts when any of its triples does.")
      .Eval("pd_consistency");
}

void AddConformity(Builder& b) {
  const char* kBranch = "pm:description-content_quality";
  b.Node("pm:conformity", {kBranch}, RK::kScore,
         "Reports on the existence or number of required things or patterns in the object.");
  b.Node("pm:conformity_of_this_statement_wrt_this_requirement", {"pm:conformity"}, RK::kBoolean,
         "True iff the statement satisfies the requirement statement. Declared-only: "
         "requirements are assessed through the ratio functions below.")
      .Sig({"ST", "ST"});
  b.Node("pm:ratio_of_conformity_to_this_requirement_in_this_statement", {"pm:conformity"},
         RK::kRatio, "Share of the statement that conforms to the requirement.")
      .Sig({"ST", "ST"});
  b.Node("pm:ratio_of_conformity_of_the_KB",
         {"pm:ratio_of_conformity_to_this_requirement_in_this_statement"}, RK::kRatio,
         "Conformity ratios computed over a whole KB.");
  b.Node("LD:modeling_granularity", {"pm:ratio_of_conformity_of_the_KB"}, RK::kRatio,
         "Granularity of the modeling; takes no argument. Declared-only: no formula is given.");
  b.Node("PD:structuredness", {"pm:ratio_of_conformity_of_the_KB"}, RK::kScore,
         "How far instances carry the relations their schema requires.");
  b.Node("PD:coverage", {"PD:structuredness"}, RK::kRatio,
         "Instances carrying every required property of all their classes, as a count and as "
         "a share of the typed instances of required classes.")
      .Eval("coverage");
  b.Node("PD:coherence", {"PD:structuredness"}, RK::kRatio,
         "Mean over instances of the share of their required properties that are present.")
      .Eval("coherence");
  b.Node("PD:completeness", {"pm:ratio_of_conformity_of_the_KB", "Kahn:Completeness"}, RK::kScore,
         "Do all required terms and relations exist?");
  b.Alias("LD:completeness", "PD:completeness");
  b.Node("PD:intensional_completeness", {"PD:completeness"}, RK::kRatio,
         "Required properties used by at least one triple, over all required properties.")
      .Eval("intensional_completeness");
  b.Node("PD:extensional_completeness", {"PD:completeness"}, RK::kRatio,
         "Required terms occurring anywhere in the graph, over all required terms.")
      .Eval("extensional_completeness");
  b.Node("PD:LDS_Completeness", {"PD:completeness"}, RK::kRatio,
         "Subjects bearing a given property (rdfs:label unless configured), over all subjects.")
      .Eval("lds_completeness");
  b.Node("PD:relevancy", {"pm:ratio_of_conformity_of_the_KB", "Kahn:Relevancy"}, RK::kRatio,
         "Share of triples relevant for an application, given as relevance patterns. "
         "Declared-only when no pattern is configured.")
      .Eval("relevancy_ratio");
  b.Alias("LD:Boundedness", "PD:relevancy");
  b.Node("PD:verifiability", {"pm:ratio_of_conformity_of_the_KB", "SF:Content"}, RK::kScore,
         "Existence of information to check correctness. Declared-only.");
  b.Alias("SF:Verifiability", "PD:verifiability");
  b.Node("PD:traceability", {"PD:verifiability"}, RK::kNone, "Declared-only.");
  b.Node("PD:provability", {"PD:verifiability"}, RK::kNone, "Declared-only.");
  b.Node("PD:accountability", {"PD:verifiability"}, RK::kNone, "Declared-only.");
  b.Node("SF:validity", {"pm:conformity", "SF:Usage"}, RK::kBoolean,
         "No syntax errors: every input parses without error diagnostics.")
      .Eval("syntax_validity");
  b.Alias("SF:Validity_of_documents", "SF:validity");
  b.Node("PD:validity", {"SF:validity"}, RK::kBoolean, "Declared-only specialization.");
  b.Node("SF:amount_of_data", {"pm:conformity", "SF:Usage", "Kahn:Appropriate_amount"},
         RK::kCount, "Amount of data published. Declared-only: no target amount is defined.");
  b.Alias("SF:Amount_of_Data", "SF:amount_of_data");

  b.Node("pm:representation_quality", {"pm:conformity"}, RK::kScore,
         "Conformity of how the knowledge is represented.");
  b.Node("pm:organization", {"pm:representation_quality"}, RK::kScore,
         "Organization of formal and informal objects in the KB.");
  b.Node("pm:at_least_minimal_organization", {"pm:organization"}, RK::kBoolean,
         "Minimal organization as enforced by a cooperative KB server. Declared-only.");
  b.Node("pm:reachability", {"pm:organization"}, RK::kScore,
         "Relations leading out of and into the object.");
  b.Alias("PD:reachability", "pm:reachability");
  b.Node("pm:out-relations", {"pm:reachability"}, RK::kScore,
         "Relations from the object; the more and the more widely known their targets, the "
         "better.");
  b.Node("PD:external_links", {"pm:out-relations"}, RK::kCount,
         "Number of triples whose object IRI lies outside every local namespace.")
      .Eval("link_stats", "external_link_count");
  b.Node("PD:outdegree", {"pm:out-relations"}, RK::kRatio,
         "External links over all triples.")
      .Eval("link_stats", "external_ratio");
  b.Node("pm:in-relations", {"pm:reachability"}, RK::kScore, "Relations to the object.");
  b.Node("PD:indegree", {"pm:in-relations"}, RK::kCount,
         "Incoming links from other KBs. Declared-only: needs data beyond the assessed inputs.");
  b.Node("pm:non-redundancy", {"pm:organization"}, RK::kScore,
         "Absence of implicit or explicit redundancy.");
  b.Node("PD:intensional_conciseness", {"pm:non-redundancy"}, RK::kRatio,
         "Triples not re-derivable from the others under the RDFS rules, over all triples.")
      .Eval("redundancy_ratio");
  b.Node("pm:expressiveness_economy", {"pm:organization"}, RK::kScore,
         "Avoidance of needlessly expressive constructs. Declared-only: no measurable construct "
         "set exists for plain RDF.");
  b.Node("pm:modeling_uniformity", {"pm:organization"}, RK::kScore,
         "Lexical, structural or ontological conventions applied uniformly.");
  b.Node("LD:directionality", {"pm:modeling_uniformity"}, RK::kBoolean,
         "Consistent direction of relations. Declared-only.");
  b.Node("pm:use_of_the_graph-oriented_reading_convention", {"pm:modeling_uniformity"},
         RK::kBoolean, "Relation names read from source to destination. Declared-only.");
  b.Node("pm:conformity_to_an_abstract_model_or_ontology_or_methodology",
         {"pm:representation_quality"}, RK::kScore,
         "Conformity to a model, ontology or methodology.");
  b.Node("pm:conform_to_Ontoclean", {"pm:conformity_to_an_abstract_model_or_ontology_or_methodology"},
         RK::kBoolean,
         "Every object instantiates an OntoClean second-order type. Declared-only: rigidity "
         "checking is out of scope.");
  b.Node("pm:use_of_a_standard_model",
         {"pm:conformity_to_an_abstract_model_or_ontology_or_methodology"}, RK::kBoolean,
         "A standard abstract model is used. Declared-only.");
}

void AddTermRepresentation(Builder& b) {
  b.Node("pm:quality_of_the_representation_of_terms", {"pm:representation_quality"}, RK::kScore,
         "Quality of how individual terms are identified, named, typed and labeled.");
  b.Node("pm:identification_by_properly_formed_URIs", {"pm:quality_of_the_representation_of_terms"},
         RK::kRatio,
         "Objects are identified by well-formed HTTP URIs. With probing enabled the "
         "dereferenceability of a sample is reported alongside.")
      .Eval("uri_quality")
      .Aux("dereferenceability");
  b.Node("pm:following_of_naming_conventions",
         {"pm:quality_of_the_representation_of_terms", "ODP:Naming_ODP"}, RK::kRatio,
         "Local names passing the naming conventions. The default set is a stand-in: "
         "non-empty, starting with a letter, camelCase or single-underscore words, no "
         "trailing digits-only segment.")
      .Eval("naming_convention_ratio");
  b.Node("LD:referential_correspondence", {"pm:quality_of_the_representation_of_terms"},
         RK::kBoolean, "Consistency and non-redundancy of identifiers. Declared-only.");
  b.Node("LD:typing", {"pm:quality_of_the_representation_of_terms", "LDpattern:Link_Not_Label"},
         RK::kRatio, "Subjects with at least one rdf:type, over all subjects.")
      .Eval("typing_ratio");
  b.Node("PD:vocabulary_understandability",
         {"pm:quality_of_the_representation_of_terms", "LDpattern:Label_Everything"}, RK::kRatio,
         "Locally defined subjects with a human-readable label, over such subjects.")
      .Eval("labels_ratio");
  b.Node("LD:intelligibility",
         {"pm:quality_of_the_representation_of_terms", "SF:Representation",
          "Kahn:Ease_of_understanding"},
         RK::kScore, "Intelligibility of terms. Declared-only.");
  b.Alias("SF:comprehensibility", "LD:intelligibility");
  b.Alias("SF:Comprehensibility", "LD:intelligibility");
  b.Node("PD:internationalization_understandability",
         {"pm:quality_of_the_representation_of_terms", "LDpattern:Multi-Lingual_Literal"},
         RK::kRatio, "Language-tagged plain literals over all plain literals.")
      .Eval("language_tag_ratio");
  b.Node("pm:quality_of_existing_or_derivable_relations",
         {"pm:quality_of_the_representation_of_terms"}, RK::kScore,
         "Quality of the relations stated or derivable about terms.");
  b.Node("pm:use_of_binary_relations_only", {"pm:quality_of_existing_or_derivable_relations"},
         RK::kBoolean, "Only binary relations are used. Declared-only.");
  b.Node("pm:quality_of_existing_or_derivable_meta-statements",
         {"pm:quality_of_the_representation_of_terms"}, RK::kScore,
         "Quality of meta-statements, and of relations from statements.");
  b.Node("pm:quality_of_existing_or_derivable_contexts",
         {"pm:quality_of_existing_or_derivable_meta-statements"}, RK::kScore,
         "Temporal, spatial, modal and source contexts of statements.");
  b.Node("pm:provenance", {"pm:quality_of_existing_or_derivable_contexts"}, RK::kScore,
         "Sources and creation dates are represented.");
  b.Node("LD:Attribution", {"pm:provenance"}, RK::kBoolean,
         "At least one triple names a creator, publisher, contributor or source.")
      .Eval("provenance_check", "attribution");
  b.Node("LD:History", {"pm:provenance"}, RK::kBoolean,
         "At least one creation, modification or issue date with a date-valued literal.")
      .Eval("provenance_check", "history");
  b.Node("LD:Authoritative", {"pm:provenance"}, RK::kBoolean,
         "The author is a credible authority in the domain. Declared-only.");
  b.Node("pm:loss-less_integration", {"pm:quality_of_existing_or_derivable_contexts"},
         RK::kBoolean, "Integration kept the semantics of the source objects. Declared-only.");
  b.Node("PD:timeliness",
         {"pm:quality_of_existing_or_derivable_contexts", "SF:Content", "Kahn:Timeliness"},
         RK::kScore, "Is the object up to date? Declared-only: no reference time is ingested.");
  b.Alias("SF:timeliness", "PD:timeliness");
  b.Alias("SF:Timeliness", "PD:timeliness");
  b.Alias("LD:Currency", "PD:timeliness");
  b.Node("PD:newness", {"PD:timeliness"}, RK::kBoolean, "Timely creation. Declared-only.");
  b.Node("PD:freshness", {"PD:timeliness"}, RK::kBoolean, "Timely update. Declared-only.");
  b.Node("SF:licensing", {"pm:quality_of_existing_or_derivable_contexts", "SF:Usage"},
         RK::kBoolean, "A license is stated. Declared-only.");
  b.Alias("LD:licensed", "SF:licensing");
  b.Alias("SF:Licencing", "SF:licensing");
  b.Node("PD:openness", {"SF:licensing"}, RK::kBoolean,
         "The stated license is open. Declared-only.");
  b.Node("pm:security", {"pm:quality_of_existing_or_derivable_contexts"}, RK::kScore,
         "Signatures, encryption and maintainability. Declared-only.");
  b.Node("LD:sustainable", {"pm:security"}, RK::kBoolean, "Maintainability. Declared-only.");
}

void AddMediumBranch(Builder& b) {
  const char* kBranch = "pm:description-medium_quality";
  b.Node("pm:quality_of_this_descr_medium", {kBranch}, RK::kScore,
         "Evaluates the source medium on all its criteria, by aggregation.");
  b.Node("pm:descr_medium_quality_of_this_descr_medium", {"pm:quality_of_this_descr_medium"},
         RK::kScore, "Qualities of the formats and notations themselves.");
  b.Node("pm:quality_of_the_descr_content_related_to_this_descr_medium",
         {"pm:quality_of_this_descr_medium"}, RK::kScore, "Declared-only.");
  b.Node("pm:quality_of_the_descr_containers_related_to_descr_medium",
         {"pm:quality_of_this_descr_medium"}, RK::kScore, "Declared-only.");
  const char* kFormats = "pm:descr_medium_quality_of_this_descr_medium";
  b.Node("pm:use_of_standard_formats", {kFormats}, RK::kBoolean,
         "The input format is a standard knowledge representation format.")
      .Eval("format_profile", "is_standard");
  b.Node("pm:use_of_structured_formats", {kFormats}, RK::kBoolean,
         "The input format is structured.")
      .Eval("format_profile", "is_structured");
  b.Node("pm:use_of_formats_distinguishing_structure_from_presentation", {kFormats}, RK::kBoolean,
         "The input format separates structure from presentation.")
      .Eval("format_profile", "separates_structure_from_presentation");
  b.Node("pm:use_of_notations_that_can_be_adapted_by_the_user", {kFormats}, RK::kBoolean,
         "Users can adapt the notation's syntax. A profile flag, not an adaptation engine.")
      .Eval("format_profile", "user_adaptable_syntax");
  b.Node("pm:use_of_machine-understandable-formats", {kFormats}, RK::kBoolean,
         "The input format is machine-interpretable.")
      .Eval("format_profile", "machine_interpretable");
  b.Node("pm:use_of_formats_that_have_an_interpretation_in_some_logic", {kFormats}, RK::kBoolean,
         "The input format has a logic interpretation.")
      .Eval("format_profile", "logic_interpretation");
  b.Node("PD:format_interpretability", {kFormats, "Kahn:Interpretability"}, RK::kScore,
         "Weighted mean of the format profile criteria mapped to [0, 1].")
      .Eval("format_score");
  b.Node("PD:human_and_machine_interpretability", {"PD:format_interpretability"}, RK::kScore,
         "Human readability rank of the format over the highest rank in the profile table.")
      .Eval("format_profile", "human_readability");
  b.Node("pm:format_structural_quality", {kFormats}, RK::kScore,
         "Structural qualities of a format: expressiveness, concision and uniformity.");
  b.Node("pm:format_abstract-expressiveness", {"pm:format_structural_quality"}, RK::kScore,
         "Expressiveness of the format's abstract model. Declared-only.");
  b.Node("pm:syntactic_expressiveness", {"pm:format_structural_quality"}, RK::kScore,
         "Higher-level notations score higher; mean of the syntactic construct flags.");
  b.Node("pm:syntactic_constructs_for_logical_constructs", {"pm:syntactic_expressiveness"},
         RK::kBoolean, "Keywords for numerical quantifiers and other logical constructs.")
      .Eval("format_profile", "numerical-quantifiers");
  b.Node("pm:syntactic_constructs_for_creating_shortcuts", {"pm:syntactic_expressiveness"},
         RK::kBoolean, "Abbreviation constructs such as prefixes and lists.")
      .Eval("format_profile", "shortcut-constructs");
  b.Node("pm:syntactic_constructs_for_ontological_primitives", {"pm:syntactic_expressiveness"},
         RK::kBoolean, "Keywords for ontological primitives such as type partitions.")
      .Eval("format_profile", "ontological-primitives");
  b.Node("pm:referable_first-order-entities", {"pm:syntactic_expressiveness"}, RK::kBoolean,
         "Relation nodes, quantifiers and other entities can be referred to.")
      .Eval("format_profile", "first-order-referable-nodes");
  b.Node("pm:format_concision", {"pm:format_structural_quality", "Kahn:Concision"}, RK::kRatio,
         "Triples per byte of the input serialization; higher is more concise. Serializations "
         "in other formats are compared alongside.")
      .Eval("concision")
      .Aux("compare_serializations");
  b.Node("pm:format_uniformity", {"pm:format_structural_quality"}, RK::kScore,
         "Similar things can be presented in similar ways. Declared-only.");
  b.Node("SF:Uniformity", {"pm:format_uniformity", "SF:Representation"}, RK::kScore,
         "Format uniformity over a whole KB. Declared-only.");
  b.Node("pm:performance_of_this_format_for_this_task", {kBranch}, RK::kScore,
         "Fitness of a format for a task. Declared-only: no task model is defined.")
      .Sig({"description_medium", "task"});
}

void AddContainerBranch(Builder& b) {
  const char* kBranch = "pm:description-container_quality";
  b.Node("pm:quality_of_this_descr_container", {kBranch}, RK::kScore,
         "Evaluates the source container on all its criteria, by aggregation.");
  b.Node("pm:descr_container_quality_of_this_descr_container",
         {"pm:quality_of_this_descr_container"}, RK::kScore, "Declared-only.");
  b.Node("pm:quality_of_the_descr_content_related_to_this_descr_container",
         {"pm:quality_of_this_descr_container"}, RK::kScore, "Declared-only.");
  b.Node("pm:quality_of_the_descr_media_related_to_descr_container",
         {"pm:quality_of_this_descr_container"}, RK::kScore, "Declared-only.");
  b.Node("pm:quality_of_the_processes_supported_by_this_descr_container",
         {"pm:quality_of_this_descr_container"}, RK::kScore, "Declared-only.");
  b.Node("pm:storage_related_quality", {kBranch}, RK::kScore,
         "How the container stores and modularizes knowledge.");
  b.Node("pm:maximal_size_of_the_KB", {"pm:storage_related_quality"}, RK::kCount,
         "Largest KB the server supports. Declared-only: not observable by probing.");
  b.Node("pm:container_based_modularization", {"pm:storage_related_quality"}, RK::kScore,
         "Modularization through containers. Declared-only.");
  b.Node("pm:static_container_based_modularization", {"pm:container_based_modularization"},
         RK::kScore, "Modularization by static files. Declared-only.");
  b.Node("pm:dynamic_container_based_modularization", {"pm:container_based_modularization"},
         RK::kScore, "Forwarding or replication among KBs. Declared-only.");
  b.Node("LD:connectedness", {"pm:storage_related_quality"}, RK::kRatio,
         "Do combined datasets join correctly? External object IRIs of one input that another "
         "input defines as subjects, over all external object IRIs.")
      .Eval("connectedness");
  b.Node("pm:assertion_related_quality", {kBranch}, RK::kScore,
         "What can be added or updated, by whom and in which language.");
  b.Node("pm:ontological_flexibility", {"pm:assertion_related_quality"}, RK::kBoolean,
         "The ontology is not fixed. Declared-only checklist item.");
  b.Pattern("LDpattern:annotation", {"pm:assertion_related_quality", "LDpattern:Publishing_pattern"},
            "Third-party resources are accepted. Declared-only checklist item.");
  b.Alias("LDpattern:Annotation", "LDpattern:annotation");
  b.Pattern("LDpattern:progressive_enrichment",
            {"pm:assertion_related_quality", "LDpattern:Publishing_pattern"},
            "The data and its model can be improved over time. Declared-only checklist item.");
  b.Alias("LDpattern:Progressive_Enrichment", "LDpattern:progressive_enrichment");
  b.Node("pm:checking_possibilities", {"pm:assertion_related_quality"}, RK::kBoolean,
         "Inconsistencies or redundancies the server detects. Declared-only checklist item.");
  b.Node("pm:information_retrieval_related_quality", {kBranch}, RK::kScore,
         "Retrieval over the whole KB or some of its statements.");
  b.Node("pm:published_or_given_metadata", {"pm:information_retrieval_related_quality"},
         RK::kBoolean,
         "Metadata about the KB published through topics, sitemaps, VoID or DCAT. "
         "Declared-only; access-method declarations feed PD:accessibility.");
  b.Pattern("LDpattern:Document_Type", {"pm:published_or_given_metadata",
                                        "LDpattern:Publishing_pattern"},
            "A topic or document type describes the published data.");
  b.Node("pm:object_accessibility", {"pm:information_retrieval_related_quality", "SF:System"},
         RK::kScore, "How the objects of the KB can be reached.");
  b.Node("PD:accessibility", {"pm:object_accessibility", "Kahn:Accessibility"}, RK::kSet,
         "Declared access methods: data dump, SPARQL endpoint, dereferenceable resources, API.")
      .Eval("accessibility_methods");
  b.Alias("SF:Accessibility", "PD:accessibility");
  b.Node("PD:availability", {"pm:object_accessibility"}, RK::kRatio,
         "Share of probes that succeeded; probe frequency stands in for uptime.")
      .Eval("availability");
  b.Node("SF:performance", {"pm:object_accessibility", "SF:System"}, RK::kScore,
         "Low latency, high throughput, small performance variations.");
  b.Alias("SF:Performance", "SF:performance");
  b.Node("PD:response_time", {"pm:object_accessibility"}, RK::kDuration,
         "Median latency of successful probes (lower of the two middle values), with p90 and "
         "max reported alongside.")
      .Eval("response_time_stats");
  b.Node("PD:robustness", {"pm:object_accessibility"}, RK::kScore,
         "Mean of per-window availabilities over fixed time windows; empty windows are "
         "skipped.")
      .Eval("robustness");
  b.Node("pm:querying_possibilities", {"pm:object_accessibility"}, RK::kBoolean,
         "What can be queried and how. Declared-only checklist item.");
  b.Node("pm:interface_personalization", {kBranch}, RK::kBoolean,
         "End users can adapt input and output presentation. Declared-only checklist item.");
}

void AddSfCategories(Builder& b) {
  b.Dimension("SF:Quality_criterion", {"pm:content_based_quality"},
              "Quality criteria for Linked Data sources. Provisional placement: the list "
              "mixes content, medium and container criteria.")
      .Provisional();
  b.Dimension("SF:Content", {"SF:Quality_criterion", "pm:description-content_quality"},
              "Consistency, timeliness and verifiability criteria.")
      .Provisional();
  b.Dimension("SF:Representation", {"SF:Quality_criterion"},
              "Uniformity, versatility and comprehensibility; mixes medium and container "
              "criteria, so it stays outside the description branches.")
      .Provisional();
  b.Dimension("SF:Versatility", {"SF:Representation"},
              "Declared-only: the criterion is not defined further.");
  b.Dimension("SF:Usage", {"SF:Quality_criterion"},
              "Validity of documents, amount of data and licensing; mixes content and "
              "container criteria.")
      .Provisional();
  b.Dimension("SF:System", {"SF:Quality_criterion", "pm:description-container_quality"},
              "Accessibility and performance criteria.")
      .Provisional();
}

void AddKahnCategories(Builder& b) {
  b.Dimension("Kahn:Quality_dimension", {"pm:content_based_quality"},
              "Information quality dimensions from the consumer perspective. Provisional "
              "placement.")
      .Provisional();
  b.Dimension("Kahn:Intrinsic", {"Kahn:Quality_dimension"}, "Intrinsic dimensions.");
  b.Dimension("Kahn:Contextual", {"Kahn:Quality_dimension"}, "Contextual dimensions.");
  b.Dimension("Kahn:Representational", {"Kahn:Quality_dimension"}, "Representational dimensions.");
  b.Dimension("Kahn:Accessibility", {"Kahn:Quality_dimension"},
              "Accessibility dimensions; also the accessibility dimension itself.");
  const char* kDeclared = "Declared-only: a subjective consumer judgment.";
  b.Dimension("Kahn:Believability", {"Kahn:Intrinsic"}, kDeclared);
  b.Dimension("Kahn:Accuracy", {"Kahn:Intrinsic"}, "Specialized by LD:accuracy.").Provisional();
  b.Dimension("Kahn:Objectivity", {"Kahn:Intrinsic"}, kDeclared);
  b.Dimension("Kahn:Reputation", {"Kahn:Intrinsic"}, kDeclared);
  b.Dimension("Kahn:Value-added", {"Kahn:Contextual"}, kDeclared);
  b.Dimension("Kahn:Relevancy", {"Kahn:Contextual"}, "Specialized by PD:relevancy.").Provisional();
  b.Dimension("Kahn:Timeliness", {"Kahn:Contextual"}, "Specialized by PD:timeliness.")
      .Provisional();
  b.Dimension("Kahn:Completeness", {"Kahn:Contextual"}, "Specialized by PD:completeness.")
      .Provisional();
  b.Dimension("Kahn:Appropriate_amount", {"Kahn:Contextual"},
              "Specialized by SF:amount_of_data.")
      .Provisional();
  b.Dimension("Kahn:Interpretability", {"Kahn:Representational"},
              "Specialized by PD:format_interpretability.")
      .Provisional();
  b.Dimension("Kahn:Ease_of_understanding", {"Kahn:Representational"},
              "Specialized by LD:intelligibility.")
      .Provisional();
  b.Dimension("Kahn:Consistency", {"Kahn:Representational"}, "Specialized by pm:consistency.")
      .Provisional();
  b.Dimension("Kahn:Concision", {"Kahn:Representational"}, "Specialized by pm:format_concision.")
      .Provisional();
  b.Dimension("Kahn:Access_security", {"Kahn:Accessibility"}, kDeclared);
}

void AddPatternCategories(Builder& b) {
  b.Pattern("LDpattern:Linked_Data_pattern", {"pm:content_based_quality"},
            "Linked Data pattern catalogue. Provisional placement.")
      .Provisional();
  b.Pattern("LDpattern:Identifier_pattern", {"LDpattern:Linked_Data_pattern"},
            "Patterns for minting identifiers.");
  b.Pattern("LDpattern:Modelling_pattern", {"LDpattern:Linked_Data_pattern"},
            "Patterns for modeling data.");
  b.Pattern("LDpattern:Publishing_pattern", {"LDpattern:Linked_Data_pattern"},
            "Patterns for publishing data.");
  b.Pattern("LDpattern:Application_pattern", {"LDpattern:Linked_Data_pattern"},
            "Patterns for consuming data.");
  const char* kIdentifier = "Identifier pattern; specializes URI identification quality.";
  for (const char* id : {"LDpattern:Hierarchical_URIs", "LDpattern:Literal_Keys",
                         "LDpattern:Natural_Keys", "LDpattern:Patterned_URIs",
                         "LDpattern:Proxy_URIs", "LDpattern:Shared_Keys", "LDpattern:URL_Slug"}) {
    b.Pattern(id, {"LDpattern:Identifier_pattern", "pm:identification_by_properly_formed_URIs"},
              kIdentifier)
        .Provisional();
  }
  for (const char* id :
       {"LDpattern:Custom_Datatype", "LDpattern:Index_Resources", "LDpattern:Label_Everything",
        "LDpattern:Link_Not_Label", "LDpattern:Multi-Lingual_Literal", "LDpattern:N-Ary_Relation",
        "LDpattern:Ordered_List", "LDpattern:Ordering_Relation", "LDpattern:Preferred_Label",
        "LDpattern:Qualified_Relation", "LDpattern:Reified_Statement",
        "LDpattern:Repeated_Property", "LDpattern:Topic_Relation", "LDpattern:Typed_Literal"}) {
    b.Pattern(id, {"LDpattern:Modelling_pattern"}, "Modelling pattern.");
  }
  for (const char* id :
       {"LDpattern:Autodiscovery", "LDpattern:Edit_Trail", "LDpattern:Embedded_Metadata",
        "LDpattern:Equivalence_Links", "LDpattern:Link_Base", "LDpattern:Named_Graphs",
        "LDpattern:Primary_Topic", "LDpattern:SeeAlso"}) {
    b.Pattern(id, {"LDpattern:Publishing_pattern"}, "Publishing pattern.");
  }
  b.Pattern("LDpattern:materializing_inferences", {"LDpattern:Publishing_pattern"},
            "Publish a second KB with inferences materialized, for tools that cannot infer; "
            "related to verifiability.");
  b.Alias("LDpattern:Materialize_Inferences", "LDpattern:materializing_inferences");
  for (const char* id :
       {"LDpattern:Assertion_Query", "LDpattern:Blackboard", "LDpattern:Bounded_Description",
        "LDpattern:Composite_Descriptions", "LDpattern:Follow_Your_Nose",
        "LDpattern:Missing_Isn't_Broken", "LDpattern:Parallel_Retrieval",
        "LDpattern:Resource_Caching", "LDpattern:Schema_Annotation", "LDpattern:Smushing"}) {
    b.Pattern(id, {"LDpattern:Application_pattern"}, "Application pattern.");
  }
  b.Pattern("LDpattern:parallel_loading", {"LDpattern:Application_pattern"},
            "Load data in parallel; helps robustness.");
  b.Alias("LDpattern:Parallel_Loading", "LDpattern:parallel_loading");
  b.Pattern("LDpattern:transformation_query", {"LDpattern:Application_pattern"},
            "Transform the KB to conform to some models; related to verifiability.");
  b.Alias("LDpattern:Transformation_Query", "LDpattern:transformation_query");

  b.Pattern("ODP:Ontology_Design_Pattern", {"pm:content_based_quality"},
            "Ontology design pattern catalogue. Provisional placement.")
      .Provisional();
  b.Pattern("ODP:Structural_ODP", {"ODP:Ontology_Design_Pattern"}, "Structural patterns.");
  b.Pattern("ODP:Architectural_ODP", {"ODP:Structural_ODP"}, "Architectural patterns.");
  b.Pattern("ODP:Logical_ODP", {"ODP:Structural_ODP"}, "Logical patterns.");
  b.Pattern("ODP:Logical_macro_ODP", {"ODP:Logical_ODP"}, "Logical macro patterns.");
  b.Pattern("ODP:Transformation_ODP", {"ODP:Logical_ODP"}, "Transformation patterns.");
  b.Pattern("ODP:Correspondence_ODP", {"ODP:Ontology_Design_Pattern"}, "Correspondence patterns.");
  b.Pattern("ODP:Alignment_ODP", {"ODP:Correspondence_ODP"}, "Alignment patterns.");
  b.Pattern("ODP:Re-engineering_ODP", {"ODP:Correspondence_ODP"}, "Re-engineering patterns.");
  b.Pattern("ODP:Schema_reengineering_ODP", {"ODP:Re-engineering_ODP"},
            "Schema re-engineering patterns.");
  b.Pattern("ODP:Refactoring_ODP", {"ODP:Schema_reengineering_ODP"}, "Refactoring patterns.");
  b.Pattern("ODP:Content_ODP", {"ODP:Ontology_Design_Pattern"}, "Content patterns.");
  b.Pattern("ODP:Reasoning_ODP", {"ODP:Ontology_Design_Pattern"}, "Reasoning patterns.");
  b.Pattern("ODP:Lexico-syntactic_ODP", {"ODP:Ontology_Design_Pattern"},
            "Lexico-syntactic patterns.");
  b.Pattern("ODP:Presentation_ODP", {"ODP:Ontology_Design_Pattern"}, "Presentation patterns.");
  b.Pattern("ODP:Naming_ODP", {"ODP:Presentation_ODP"}, "Naming patterns.");
  b.Pattern("ODP:Annotation_ODP", {"ODP:Presentation_ODP"}, "Annotation patterns.");
}

void AddViews(TaxonomyGraph& graph) {
  for (const std::string& id : graph.ids()) {
    const MetricCategory& node = *graph.Find(id);
    if (node.kind != CategoryKind::kFunctionType) continue;
    // Unary booleans read as concepts only; their relation view would name
    // the same set.
    if (node.result_kind == ResultKind::kBoolean && node.signature.size() >= 2) {
      graph.AddView(DeriveView(graph, id, ViewKind::kRelation));
    }
    if (node.result_kind != ResultKind::kNone) {
      graph.AddView(DeriveView(graph, id, ViewKind::kConcept));
    }
  }
}

}  // namespace

const std::set<std::string>& BuiltinOperations() {
  static const std::set<std::string> kOperations = {
      // content
      "conflicts", "consistency_of_statement_wrt",
      "consistency_and_non_redundancy_of_statement_wrt", "kb_consistency",
      "consistency_ratio_pattern", "consistency_ratio_all", "consistency_ratio_of_term",
      "consistency_ratio_of_relation_on_term", "pd_consistency", "coverage", "coherence",
      "intensional_completeness", "extensional_completeness", "lds_completeness", "typing_ratio",
      "uri_quality", "labels_ratio", "language_tag_ratio", "naming_convention_ratio",
      "link_stats", "redundancy_ratio", "provenance_check", "relevancy_ratio", "syntax_validity",
      // medium
      "format_score", "format_profile", "concision", "compare_serializations",
      // container
      "dereferenceability", "availability", "response_time_stats", "robustness",
      "accessibility_methods", "connectedness"};
  return kOperations;
}

TaxonomyGraph LoadBuiltin() {
  Builder b;
  AddTopLevel(b);
  AddCorrectness(b);
  AddContentAggregations(b);
  AddConformity(b);
  AddTermRepresentation(b);
  AddMediumBranch(b);
  AddContainerBranch(b);
  AddSfCategories(b);
  AddKahnCategories(b);
  AddPatternCategories(b);
  TaxonomyGraph graph = b.Build();
  AddViews(graph);
  return graph;
}

const TaxonomyGraph& BuiltinTaxonomy() {
  static const TaxonomyGraph kGraph = LoadBuiltin();
  return kGraph;
}

}  // namespace ldq
