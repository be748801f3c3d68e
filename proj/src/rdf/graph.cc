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

#include "ldq/rdf/graph.h"

#include "ldq/error.h"

namespace ldq {

Graph::Graph(const Graph& other) { InsertAll(other); }

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    Graph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

bool Graph::Insert(Triple t) {
  auto [it, inserted] = triples_.insert(std::move(t));
  if (!inserted) return false;
  const Triple* stored = &*it;
  order_.push_back(stored);
  auto& subject_bucket = by_subject_[stored->subject()];
  if (subject_bucket.empty()) subjects_.push_back(stored->subject());
  subject_bucket.push_back(stored);
  by_predicate_[stored->predicate()].push_back(stored);
  by_object_[stored->object()].push_back(stored);
  return true;
}

void Graph::InsertAll(const Graph& other) {
  for (const Triple& t : other) Insert(t);
}

TripleRange Graph::Lookup(const Index& index, const Term& key) {
  auto it = index.find(key);
  if (it == index.end()) return TripleRange();
  return TripleRange(it->second);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (const Triple& t : a) {
    if (!b.Contains(t)) return false;
  }
  return true;
}

std::vector<Triple> MatchPattern(const Graph& graph, const TriplePattern& pattern) {
  TripleRange candidates = graph.triples();
  auto narrow = [&candidates](const PatternTerm& pt, auto lookup) {
    if (const auto* term = std::get_if<Term>(&pt)) {
      TripleRange r = lookup(*term);
      if (r.size() < candidates.size()) candidates = r;
    }
  };
  narrow(pattern.subject, [&](const Term& t) { return graph.WithSubject(t); });
  narrow(pattern.predicate, [&](const Term& t) { return graph.WithPredicate(t); });
  narrow(pattern.object, [&](const Term& t) { return graph.WithObject(t); });
  std::vector<Triple> out;
  for (const Triple& t : candidates) {
    if (pattern.Matches(t)) out.push_back(t);
  }
  return out;
}

Frame FrameOf(const Graph& graph, const Term& subject) {
  if (subject.is_literal()) {
    throw Error(ErrorCode::kStructural, "a literal has no frame: " + ToNTriples(subject));
  }
  Frame frame{subject, {}};
  for (const Triple& t : graph.WithSubject(subject)) frame.triples.push_back(t);
  return frame;
}

Degree DegreeOf(const Graph& graph, const Term& term) {
  return Degree{graph.WithSubject(term).size(), graph.WithObject(term).size()};
}

Graph Dataset::Union() const {
  Graph merged = default_graph;
  for (const auto& [name, g] : named_graphs) merged.InsertAll(g);
  return merged;
}

std::size_t Dataset::statement_count() const {
  std::size_t n = default_graph.size();
  for (const auto& [name, g] : named_graphs) n += g.size();
  return n;
}

}  // namespace ldq
