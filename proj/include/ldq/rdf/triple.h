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

#ifndef LDQ_RDF_TRIPLE_H_
#define LDQ_RDF_TRIPLE_H_

#include <compare>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "ldq/rdf/term.h"

namespace ldq {

// One RDF statement. The constructor rejects literal or predicate-position
// blank subjects with kStructural.
class Triple {
 public:
  Triple(Term subject, Term predicate, Term object);

  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }
  const Term& object() const { return object_; }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

std::string ToNTriples(const Triple& triple);

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PatternTerm = std::variant<Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  // All-variable pattern (?s ?p ?o).
  static TriplePattern Any();

  // True when some assignment of the variables maps this pattern onto `t`.
  // Repeated variables must bind to equal terms.
  bool Matches(const Triple& t) const;
  int variable_count() const;
};

}  // namespace ldq

template <>
struct std::hash<ldq::Triple> {
  std::size_t operator()(const ldq::Triple& t) const noexcept;
};

#endif  // LDQ_RDF_TRIPLE_H_
