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

#include "ldq/rdf/schema.h"

#include "ldq/error.h"
#include "ldq/rdf/vocab.h"

namespace ldq {
namespace {

void RequireIri(const Term& t, const char* what) {
  if (!t.is_iri()) {
    throw Error(ErrorCode::kStructural,
                std::string("schema ") + what + " must be an IRI: " + ToNTriples(t));
  }
}

void RequireIris(const std::set<TermPair>& pairs, const char* what) {
  for (const auto& [a, b] : pairs) {
    RequireIri(a, what);
    RequireIri(b, what);
  }
}

}  // namespace

void SchemaSpec::Merge(const SchemaSpec& other) {
  required_terms.insert(other.required_terms.begin(), other.required_terms.end());
  for (const auto& [cls, props] : other.required_properties) {
    required_properties[cls].insert(props.begin(), props.end());
  }
  subclass_edges.insert(other.subclass_edges.begin(), other.subclass_edges.end());
  subproperty_edges.insert(other.subproperty_edges.begin(), other.subproperty_edges.end());
  domains.insert(other.domains.begin(), other.domains.end());
  ranges.insert(other.ranges.begin(), other.ranges.end());
  functional_properties.insert(other.functional_properties.begin(),
                               other.functional_properties.end());
  disjoint_classes.insert(other.disjoint_classes.begin(), other.disjoint_classes.end());
  relevance_patterns.insert(relevance_patterns.end(), other.relevance_patterns.begin(),
                            other.relevance_patterns.end());
  if (other.completeness_property) completeness_property = other.completeness_property;
}

void SchemaSpec::Validate() const {
  for (const Term& t : required_terms) RequireIri(t, "required term");
  for (const auto& [cls, props] : required_properties) {
    RequireIri(cls, "class");
    for (const Term& p : props) RequireIri(p, "required property");
  }
  RequireIris(subclass_edges, "subclass edge");
  RequireIris(subproperty_edges, "subproperty edge");
  RequireIris(domains, "domain declaration");
  RequireIris(ranges, "range declaration");
  RequireIris(disjoint_classes, "disjointness declaration");
  for (const Term& p : functional_properties) RequireIri(p, "functional property");
  if (completeness_property) RequireIri(*completeness_property, "completeness property");
}

SchemaSpec SchemaFromGraph(const Graph& graph) {
  SchemaSpec spec;
  const Term type = Term::Iri(std::string(vocab::kRdfType));
  auto iri_pair = [](const Triple& t) -> std::optional<TermPair> {
    if (t.subject().is_iri() && t.object().is_iri()) return TermPair{t.subject(), t.object()};
    return std::nullopt;
  };
  for (const Triple& t : graph) {
    const std::string& p = t.predicate().value();
    if (p == vocab::kRdfsSubClassOf) {
      if (auto e = iri_pair(t)) spec.subclass_edges.insert(*e);
    } else if (p == vocab::kRdfsSubPropertyOf) {
      if (auto e = iri_pair(t)) spec.subproperty_edges.insert(*e);
    } else if (p == vocab::kRdfsDomain) {
      if (auto e = iri_pair(t)) spec.domains.insert(*e);
    } else if (p == vocab::kRdfsRange) {
      if (auto e = iri_pair(t)) spec.ranges.insert(*e);
    } else if (p == vocab::kOwlDisjointWith) {
      if (auto e = iri_pair(t)) spec.disjoint_classes.insert(*e);
    } else if (p == vocab::kRdfType && t.object().is_iri() &&
               t.object().value() == vocab::kOwlFunctionalProperty && t.subject().is_iri()) {
      spec.functional_properties.insert(t.subject());
    } else if (p == vocab::kLdqRequiredTerm && t.object().is_iri()) {
      spec.required_terms.insert(t.object());
    } else if (p == vocab::kLdqRequiredProperty) {
      if (auto e = iri_pair(t)) spec.required_properties[e->first].insert(e->second);
    } else if (p == vocab::kLdqRelevantPredicate && t.object().is_iri()) {
      spec.relevance_patterns.push_back(
          TriplePattern{Variable{"s"}, t.object(), Variable{"o"}});
    } else if (p == vocab::kLdqRelevantClass && t.object().is_iri()) {
      spec.relevance_patterns.push_back(TriplePattern{Variable{"s"}, type, t.object()});
    } else if (p == vocab::kLdqCompletenessProperty && t.object().is_iri()) {
      spec.completeness_property = t.object();
    }
  }
  return spec;
}

}  // namespace ldq
