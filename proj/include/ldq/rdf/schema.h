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

#ifndef LDQ_RDF_SCHEMA_H_
#define LDQ_RDF_SCHEMA_H_

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ldq/rdf/graph.h"
#include "ldq/rdf/term.h"
#include "ldq/rdf/triple.h"

namespace ldq {

using TermPair = std::pair<Term, Term>;

// Schema declarations and requirements that drive entailment, conflict rules
// and the completeness/coverage metrics. Every referenced term is an IRI.
struct SchemaSpec {
  std::set<Term> required_terms;
  std::map<Term, std::set<Term>> required_properties;  // class -> properties
  std::set<TermPair> subclass_edges;                    // (sub, super)
  std::set<TermPair> subproperty_edges;                 // (sub, super)
  std::set<TermPair> domains;                           // (property, class)
  std::set<TermPair> ranges;                            // (property, class)
  std::set<Term> functional_properties;
  std::set<TermPair> disjoint_classes;
  std::vector<TriplePattern> relevance_patterns;
  std::optional<Term> completeness_property;

  // True when no entailment rule can fire.
  bool has_no_entailment() const {
    return subclass_edges.empty() && subproperty_edges.empty() && domains.empty() &&
           ranges.empty();
  }

  void Merge(const SchemaSpec& other);
  // Throws kStructural when a referenced term is not an IRI.
  void Validate() const;
};

// Reads subclass/subproperty/domain/range, owl:FunctionalProperty and
// owl:disjointWith declarations plus the urn:ldq: requirement terms
// (requiredTerm, requiredProperty, relevantPredicate, relevantClass,
// completenessProperty) from `graph`.
SchemaSpec SchemaFromGraph(const Graph& graph);

}  // namespace ldq

#endif  // LDQ_RDF_SCHEMA_H_
