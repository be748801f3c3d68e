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

#include <optional>

#include "cursor.h"
#include "ldq/error.h"
#include "ldq/parse/parser.h"
#include "parsers.h"

namespace ldq::parse_internal {
namespace {

enum class Slot { kSubject, kPredicate, kObject, kGraph };

bool AtLineEnd(const Cursor& cur) {
  return cur.at_end() || cur.peek() == '\n' || cur.peek() == '\r';
}

void SkipBlanks(Cursor& cur) {
  while (!cur.at_end() && (cur.peek() == ' ' || cur.peek() == '\t')) cur.get();
}

void SkipLine(Cursor& cur) {
  while (!AtLineEnd(cur)) cur.get();
  if (!cur.at_end()) cur.get();
}

Term ReadTerm(Cursor& cur, Slot slot) {
  Position start = cur.position();
  if (AtLineEnd(cur)) {
    switch (slot) {
      case Slot::kSubject: cur.Fail("missing-term", "expected a subject");
      case Slot::kPredicate: cur.Fail("missing-term", "expected a predicate");
      case Slot::kObject: cur.Fail("missing-term", "expected an object");
      case Slot::kGraph: cur.Fail("missing-term", "expected a graph label");
    }
  }
  char c = cur.peek();
  if (c == '<') {
    cur.get();
    std::string iri = ReadIriRef(cur, start);
    if (!IsAbsoluteIri(iri)) {
      Cursor::FailAt(start, "relative-iri", "IRI must be absolute: <" + iri + ">");
    }
    return Term::Iri(std::move(iri));
  }
  if (c == '_' && cur.peek(1) == ':') {
    if (slot == Slot::kPredicate) {
      Cursor::FailAt(start, "bnode-predicate", "a blank node cannot be a predicate");
    }
    cur.skip(2);
    return Term::Blank(ReadBlankLabel(cur, start));
  }
  if (c == '"') {
    if (slot == Slot::kSubject) {
      Cursor::FailAt(start, "literal-subject", "a literal cannot be a subject");
    }
    if (slot == Slot::kPredicate) {
      Cursor::FailAt(start, "literal-predicate", "a literal cannot be a predicate");
    }
    if (slot == Slot::kGraph) {
      Cursor::FailAt(start, "literal-graph", "a literal cannot name a graph");
    }
    cur.get();
    std::string lexical = ReadShortString(cur, '"', start);
    if (cur.peek() == '@') {
      Position tag_start = cur.position();
      cur.get();
      return Term::LangLiteral(std::move(lexical), ReadLangTag(cur, tag_start));
    }
    if (cur.peek() == '^' && cur.peek(1) == '^') {
      cur.skip(2);
      Position dt_start = cur.position();
      if (cur.peek() != '<') cur.Fail("invalid-datatype", "datatype must be an IRI");
      cur.get();
      std::string dt = ReadIriRef(cur, dt_start);
      if (!IsAbsoluteIri(dt)) {
        Cursor::FailAt(dt_start, "relative-iri", "datatype IRI must be absolute");
      }
      if (dt == vocab::kRdfLangString) {
        Cursor::FailAt(dt_start, "invalid-datatype", "rdf:langString requires a language tag");
      }
      return Term::Literal(std::move(lexical), std::move(dt));
    }
    return Term::Literal(std::move(lexical));
  }
  cur.Fail("unexpected-character", std::string("unexpected character '") + c + "'");
}

}  // namespace

void ParseLineFormat(std::string_view bytes, bool quads, ParseMode mode, ParseOutcome& out) {
  Cursor cur(bytes);
  while (!cur.at_end()) {
    SkipBlanks(cur);
    if (AtLineEnd(cur)) {
      if (!cur.at_end()) cur.get();
      continue;
    }
    if (cur.peek() == '#') {
      SkipLine(cur);
      continue;
    }
    try {
      Term subject = ReadTerm(cur, Slot::kSubject);
      SkipBlanks(cur);
      Term predicate = ReadTerm(cur, Slot::kPredicate);
      SkipBlanks(cur);
      Term object = ReadTerm(cur, Slot::kObject);
      SkipBlanks(cur);
      std::optional<Term> graph;
      if (!cur.at_end() && cur.peek() != '.' && !AtLineEnd(cur)) {
        if (!quads) {
          cur.Fail("extra-term", "N-Triples statements have exactly three terms");
        }
        graph = ReadTerm(cur, Slot::kGraph);
        SkipBlanks(cur);
      }
      if (cur.peek() != '.' || cur.at_end()) {
        cur.Fail("missing-dot", "statement is not terminated by '.'");
      }
      cur.get();
      SkipBlanks(cur);
      if (!AtLineEnd(cur) && cur.peek() != '#') {
        cur.Fail("trailing-content", "unexpected content after '.'");
      }
      SkipLine(cur);
      Triple t(std::move(subject), std::move(predicate), std::move(object));
      if (graph) {
        out.dataset.named_graphs[*graph].Insert(std::move(t));
      } else {
        out.dataset.default_graph.Insert(std::move(t));
      }
    } catch (const SyntaxError& e) {
      out.diagnostics.push_back(
          ParseDiagnostic{Severity::kError, e.where.line, e.where.column, e.message, e.code});
      if (mode == ParseMode::kStrict) {
        out.dataset = Dataset{};
        return;
      }
      SkipLine(cur);
    }
  }
}

}  // namespace ldq::parse_internal
