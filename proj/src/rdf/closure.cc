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

#include "ldq/rdf/closure.h"

#include <unordered_set>

#include "ldq/rdf/vocab.h"

namespace ldq {
namespace {

const Term& TypePredicate() {
  static const Term type = Term::Iri(std::string(vocab::kRdfType));
  return type;
}

void Index(const std::set<TermPair>& edges, std::unordered_map<Term, std::vector<Term>>& out) {
  for (const auto& [from, to] : edges) out[from].push_back(to);
}

}  // namespace

Entailment::Entailment(const SchemaSpec& schema) : trivial_(schema.has_no_entailment()) {
  Index(schema.subclass_edges, superclasses_);
  Index(schema.subproperty_edges, superproperties_);
  Index(schema.domains, domains_);
  Index(schema.ranges, ranges_);
}

void Entailment::DirectConsequences(const Triple& t, std::vector<Triple>& out) const {
  const Term& type = TypePredicate();
  if (t.predicate() == type && t.object().is_iri()) {
    if (auto it = superclasses_.find(t.object()); it != superclasses_.end()) {
      for (const Term& super : it->second) out.emplace_back(t.subject(), type, super);
    }
  }
  if (auto it = superproperties_.find(t.predicate()); it != superproperties_.end()) {
    for (const Term& super : it->second) {
      if (super.is_iri()) out.emplace_back(t.subject(), super, t.object());
    }
  }
  if (auto it = domains_.find(t.predicate()); it != domains_.end()) {
    for (const Term& cls : it->second) out.emplace_back(t.subject(), type, cls);
  }
  if (!t.object().is_literal()) {
    if (auto it = ranges_.find(t.predicate()); it != ranges_.end()) {
      for (const Term& cls : it->second) out.emplace_back(t.object(), type, cls);
    }
  }
}

std::vector<Triple> Entailment::Consequences(const Triple& t) const {
  std::vector<Triple> result{t};
  if (trivial_) return result;
  std::unordered_set<Triple> seen{t};
  std::vector<Triple> step;
  for (std::size_t i = 0; i < result.size(); ++i) {
    step.clear();
    DirectConsequences(result[i], step);
    for (Triple& d : step) {
      if (seen.insert(d).second) result.push_back(std::move(d));
    }
  }
  return result;
}

Graph RdfsClosure(const Graph& graph, const SchemaSpec& schema) {
  Graph closure = graph;
  Entailment entailment(schema);
  if (entailment.trivial()) return closure;
  for (const Triple& t : graph) {
    for (Triple& d : entailment.Consequences(t)) closure.Insert(std::move(d));
  }
  return closure;
}

}  // namespace ldq
