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

#ifndef LDQ_RDF_TERM_H_
#define LDQ_RDF_TERM_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "ldq/rdf/vocab.h"

namespace ldq {

enum class TermKind : unsigned char { kIri, kBlankNode, kLiteral };

// An RDF term. Equality and ordering compare every field, so two literals
// with the same lexical form but different datatypes are distinct.
class Term {
 public:
  // Throws kStructural when `iri` lacks a scheme.
  static Term Iri(std::string iri);
  static Term Blank(std::string label);
  static Term Literal(std::string lexical,
                      std::string datatype = std::string(vocab::kXsdString));
  // Language tags are normalized to lower case.
  static Term LangLiteral(std::string lexical, std::string language);

  TermKind kind() const { return kind_; }
  bool is_iri() const { return kind_ == TermKind::kIri; }
  bool is_blank() const { return kind_ == TermKind::kBlankNode; }
  bool is_literal() const { return kind_ == TermKind::kLiteral; }

  // IRI string, blank-node label, or literal lexical form.
  const std::string& value() const { return value_; }
  // Empty for non-literals.
  const std::string& datatype() const { return datatype_; }
  const std::string& language() const { return language_; }

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

bool IsAbsoluteIri(std::string_view iri);
bool IsValidLanguageTag(std::string_view tag);

// Canonical N-Triples rendering of a single term.
std::string ToNTriples(const Term& term);

// Local name of an IRI: the part after the last '#', '/' or ':'.
std::string_view LocalName(std::string_view iri);

}  // namespace ldq

template <>
struct std::hash<ldq::Term> {
  std::size_t operator()(const ldq::Term& t) const noexcept;
};

#endif  // LDQ_RDF_TERM_H_
