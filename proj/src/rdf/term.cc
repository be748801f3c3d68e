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

#include "ldq/rdf/term.h"

#include <cctype>
#include <cstdio>

#include "ldq/error.h"

namespace ldq {
namespace {

bool IsAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

void AppendUchar(std::string& out, unsigned cp) {
  char buf[12];
  if (cp <= 0xFFFF) {
    std::snprintf(buf, sizeof(buf), "\\u%04X", cp);
  } else {
    std::snprintf(buf, sizeof(buf), "\\U%08X", cp);
  }
  out += buf;
}

void AppendEscapedIri(std::string& out, std::string_view iri) {
  for (char ch : iri) {
    auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || ch == '<' || ch == '>' || ch == '"' || ch == '{' || ch == '}' ||
        ch == '|' || ch == '^' || ch == '`' || ch == '\\') {
      AppendUchar(out, c);
    } else {
      out += ch;
    }
  }
}

void AppendEscapedString(std::string& out, std::string_view s) {
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default: {
        auto c = static_cast<unsigned char>(ch);
        if (c < 0x20 || c == 0x7F) {
          AppendUchar(out, c);
        } else {
          out += ch;
        }
      }
    }
  }
}

}  // namespace

bool IsAbsoluteIri(std::string_view iri) {
  if (iri.empty() || !IsAlpha(iri[0])) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    char c = iri[i];
    if (c == ':') return true;
    if (!(IsAlpha(c) || IsDigit(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  return false;
}

bool IsValidLanguageTag(std::string_view tag) {
  std::size_t i = 0;
  std::size_t n = 0;
  while (i < tag.size() && IsAlpha(tag[i])) ++i, ++n;
  if (n == 0) return false;
  while (i < tag.size()) {
    if (tag[i] != '-') return false;
    ++i;
    n = 0;
    while (i < tag.size() && (IsAlpha(tag[i]) || IsDigit(tag[i]))) ++i, ++n;
    if (n == 0) return false;
  }
  return true;
}

Term Term::Iri(std::string iri) {
  if (!IsAbsoluteIri(iri)) {
    throw Error(ErrorCode::kStructural, "IRI is not absolute: <" + iri + ">");
  }
  return Term(TermKind::kIri, std::move(iri), {}, {});
}

Term Term::Blank(std::string label) {
  if (label.empty()) throw Error(ErrorCode::kStructural, "empty blank node label");
  return Term(TermKind::kBlankNode, std::move(label), {}, {});
}

Term Term::Literal(std::string lexical, std::string datatype) {
  if (datatype == vocab::kRdfLangString) {
    throw Error(ErrorCode::kStructural, "rdf:langString literal requires a language tag");
  }
  if (!IsAbsoluteIri(datatype)) {
    throw Error(ErrorCode::kStructural, "datatype IRI is not absolute: <" + datatype + ">");
  }
  return Term(TermKind::kLiteral, std::move(lexical), std::move(datatype), {});
}

Term Term::LangLiteral(std::string lexical, std::string language) {
  if (!IsValidLanguageTag(language)) {
    throw Error(ErrorCode::kStructural, "invalid language tag: " + language);
  }
  for (char& c : language) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return Term(TermKind::kLiteral, std::move(lexical), std::string(vocab::kRdfLangString),
              std::move(language));
}

std::string ToNTriples(const Term& term) {
  std::string out;
  switch (term.kind()) {
    case TermKind::kIri:
      out.reserve(term.value().size() + 2);
      out += '<';
      AppendEscapedIri(out, term.value());
      out += '>';
      break;
    case TermKind::kBlankNode:
      out = "_:" + term.value();
      break;
    case TermKind::kLiteral:
      out.reserve(term.value().size() + 2);
      out += '"';
      AppendEscapedString(out, term.value());
      out += '"';
      if (!term.language().empty()) {
        out += '@';
        out += term.language();
      } else if (term.datatype() != vocab::kXsdString) {
        out += "^^<";
        AppendEscapedIri(out, term.datatype());
        out += '>';
      }
      break;
  }
  return out;
}

std::string_view LocalName(std::string_view iri) {
  std::size_t pos = iri.find_last_of("#/");
  if (pos == std::string_view::npos) pos = iri.find_last_of(':');
  if (pos == std::string_view::npos) return iri;
  return iri.substr(pos + 1);
}

}  // namespace ldq

std::size_t std::hash<ldq::Term>::operator()(const ldq::Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.value());
  h ^= static_cast<std::size_t>(t.kind()) * 0x9e3779b97f4a7c15ULL;
  if (t.is_literal()) {
    h = h * 31 + std::hash<std::string>{}(t.datatype());
    h = h * 31 + std::hash<std::string>{}(t.language());
  }
  return h;
}
