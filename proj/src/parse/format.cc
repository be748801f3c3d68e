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

#include "ldq/parse/format.h"

#include <algorithm>
#include <cctype>

namespace ldq {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool StartsWithWordCi(std::string_view line, std::string_view word) {
  if (line.size() < word.size()) return false;
  if (Lower(line.substr(0, word.size())) != word) return false;
  return line.size() == word.size() || line[word.size()] == ' ' || line[word.size()] == '\t';
}

// Counts the terms of one N-Triples/N-Quads-style line before the final '.',
// or returns -1 when the line does not look like one.
int CountTerms(std::string_view line) {
  int terms = 0;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  while (true) {
    skip_ws();
    // A statement line that only lacks its '.' is left for the parser to
    // report.
    if (i >= line.size()) return (terms == 3 || terms == 4) ? terms : -1;
    char c = line[i];
    if (c == '.') {
      ++i;
      skip_ws();
      return (i >= line.size() || line[i] == '#') ? terms : -1;
    }
    if (c == '<') {
      std::size_t end = line.find('>', i);
      if (end == std::string_view::npos) return -1;
      i = end + 1;
    } else if (c == '_' && i + 1 < line.size() && line[i + 1] == ':') {
      i += 2;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i == line.size() && line.back() == '.') return -1;
    } else if (c == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') i += (line[i] == '\\') ? 2 : 1;
      if (i >= line.size()) return -1;
      ++i;
      if (i < line.size() && line[i] == '@') {
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '.') ++i;
      } else if (line.substr(i).starts_with("^^<")) {
        std::size_t end = line.find('>', i);
        if (end == std::string_view::npos) return -1;
        i = end + 1;
      }
    } else {
      return -1;
    }
    ++terms;
  }
}

}  // namespace

std::string_view FormatName(FormatId id) {
  switch (id) {
    case FormatId::kNTriples: return "ntriples";
    case FormatId::kNQuads: return "nquads";
    case FormatId::kTurtle: return "turtle";
    case FormatId::kRdfXmlUnsupported: return "rdfxml-unsupported";
    case FormatId::kUnknown: return "unknown";
  }
  return "unknown";
}

std::string_view MediaType(FormatId id) {
  switch (id) {
    case FormatId::kNTriples: return "application/n-triples";
    case FormatId::kNQuads: return "application/n-quads";
    case FormatId::kTurtle: return "text/turtle";
    case FormatId::kRdfXmlUnsupported: return "application/rdf+xml";
    case FormatId::kUnknown: return "application/octet-stream";
  }
  return "application/octet-stream";
}

std::optional<FormatId> ParseFormatName(std::string_view name) {
  std::string n = Lower(name);
  if (n == "ntriples" || n == "nt" || n == "n-triples") return FormatId::kNTriples;
  if (n == "nquads" || n == "nq" || n == "n-quads") return FormatId::kNQuads;
  if (n == "turtle" || n == "ttl") return FormatId::kTurtle;
  if (n == "rdfxml" || n == "rdfxml-unsupported" || n == "rdf/xml") {
    return FormatId::kRdfXmlUnsupported;
  }
  return std::nullopt;
}

std::optional<FormatId> FormatFromExtension(std::string_view filename) {
  std::size_t dot = filename.rfind('.');
  if (dot == std::string_view::npos) return std::nullopt;
  std::string ext = Lower(filename.substr(dot + 1));
  if (ext == "nt") return FormatId::kNTriples;
  if (ext == "nq") return FormatId::kNQuads;
  if (ext == "ttl") return FormatId::kTurtle;
  if (ext == "rdf" || ext == "owl" || ext == "xml") return FormatId::kRdfXmlUnsupported;
  return std::nullopt;
}

FormatId SniffFormat(std::string_view bytes) {
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  // Statement-lines inspected before settling on N-Triples.
  constexpr int kSniffLines = 64;
  int seen = 0;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find_first_of("\r\n", pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    line.remove_prefix(first);
    if (line[0] == '#') continue;
    if (line.starts_with("<?xml") || line.starts_with("<rdf:RDF")) {
      return FormatId::kRdfXmlUnsupported;
    }
    if (line.starts_with("@prefix") || line.starts_with("@base") ||
        StartsWithWordCi(line, "prefix") || StartsWithWordCi(line, "base")) {
      return FormatId::kTurtle;
    }
    int terms = CountTerms(line);
    if (terms == 4) return FormatId::kNQuads;
    if (terms == 3) {
      if (++seen >= kSniffLines) break;
      continue;
    }
    // Term-led lines that are not plain three/four-term statements use
    // Turtle abbreviations (';', ',', '[' ...).
    if (line[0] == '<' || line[0] == '_' || line[0] == '[') return FormatId::kTurtle;
    return FormatId::kUnknown;
  }
  return FormatId::kNTriples;
}

FormatId DetectFormat(std::string_view bytes, std::optional<std::string_view> filename_hint) {
  FormatId sniffed = SniffFormat(bytes);
  std::optional<FormatId> hinted;
  if (filename_hint) hinted = FormatFromExtension(*filename_hint);
  if (!hinted) return sniffed;
  if (sniffed == *hinted || sniffed == FormatId::kUnknown) return *hinted;
  if (sniffed == FormatId::kNTriples &&
      (*hinted == FormatId::kTurtle || *hinted == FormatId::kNQuads)) {
    return *hinted;
  }
  return sniffed;
}

}  // namespace ldq
