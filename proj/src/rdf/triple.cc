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

#include "ldq/rdf/triple.h"

#include <map>

#include "ldq/error.h"

namespace ldq {

Triple::Triple(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (subject_.is_literal()) {
    throw Error(ErrorCode::kStructural, "literal in subject position: " + ToNTriples(subject_));
  }
  if (!predicate_.is_iri()) {
    throw Error(ErrorCode::kStructural,
                "predicate must be an IRI: " + ToNTriples(predicate_));
  }
}

std::string ToNTriples(const Triple& triple) {
  return ToNTriples(triple.subject()) + " " + ToNTriples(triple.predicate()) + " " +
         ToNTriples(triple.object()) + " .";
}

TriplePattern TriplePattern::Any() {
  return TriplePattern{Variable{"s"}, Variable{"p"}, Variable{"o"}};
}

bool TriplePattern::Matches(const Triple& t) const {
  std::map<std::string, const Term*> bindings;
  auto unify = [&bindings](const PatternTerm& pt, const Term& value) {
    if (const auto* term = std::get_if<Term>(&pt)) return *term == value;
    const auto& name = std::get<Variable>(pt).name;
    auto [it, inserted] = bindings.try_emplace(name, &value);
    return inserted || *it->second == value;
  };
  return unify(subject, t.subject()) && unify(predicate, t.predicate()) &&
         unify(object, t.object());
}

int TriplePattern::variable_count() const {
  return static_cast<int>(std::holds_alternative<Variable>(subject)) +
         static_cast<int>(std::holds_alternative<Variable>(predicate)) +
         static_cast<int>(std::holds_alternative<Variable>(object));
}

}  // namespace ldq

std::size_t std::hash<ldq::Triple>::operator()(const ldq::Triple& t) const noexcept {
  std::hash<ldq::Term> h;
  std::size_t seed = h(t.subject());
  seed ^= h(t.predicate()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= h(t.object()) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}
