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

#ifndef LDQ_RDF_CLOSURE_H_
#define LDQ_RDF_CLOSURE_H_

#include <unordered_map>
#include <vector>

#include "ldq/rdf/graph.h"
#include "ldq/rdf/schema.h"

namespace ldq {

// Bounded RDFS entailment: subclass and subproperty propagation plus
// domain/range typing. Every rule has a single data premise, so the closure
// of a graph is the union of the closures of its triples.
class Entailment {
 public:
  explicit Entailment(const SchemaSpec& schema);

  bool trivial() const { return trivial_; }

  // Closure of the single triple `t`, starting with `t` itself.
  std::vector<Triple> Consequences(const Triple& t) const;

 private:
  void DirectConsequences(const Triple& t, std::vector<Triple>& out) const;

  bool trivial_;
  std::unordered_map<Term, std::vector<Term>> superclasses_;
  std::unordered_map<Term, std::vector<Term>> superproperties_;
  std::unordered_map<Term, std::vector<Term>> domains_;
  std::unordered_map<Term, std::vector<Term>> ranges_;
};

// Fixpoint of the entailment rules over `graph`. Idempotent and monotone;
// cycles among subclass edges terminate.
Graph RdfsClosure(const Graph& graph, const SchemaSpec& schema);

}  // namespace ldq

#endif  // LDQ_RDF_CLOSURE_H_
