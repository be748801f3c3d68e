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

#include "ldq/parse/parser.h"

#include <algorithm>
#include <tuple>

#include "ldq/error.h"
#include "parsers.h"

namespace ldq {

std::size_t FindInvalidUtf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    auto c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    unsigned cp;
    if (c >= 0xC2 && c <= 0xDF) {
      len = 2;
      cp = c & 0x1F;
    } else if (c >= 0xE0 && c <= 0xEF) {
      len = 3;
      cp = c & 0x0F;
    } else if (c >= 0xF0 && c <= 0xF4) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 3 && cp < 0x800) || (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

bool ParseOutcome::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const ParseDiagnostic& d) { return d.severity == Severity::kError; });
}

std::string FormatDiagnostic(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.severity == Severity::kError ? "error" : "warning") + ": " + d.message + " [" +
         d.code + "]";
}

ParseOutcome Parse(std::string_view bytes, FormatId format, ParseMode mode) {
  if (format != FormatId::kNTriples && format != FormatId::kNQuads &&
      format != FormatId::kTurtle) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "cannot parse format " + std::string(FormatName(format)));
  }
  if (std::size_t bad = FindInvalidUtf8(bytes); bad != std::string_view::npos) {
    throw Error(ErrorCode::kEncoding, "invalid UTF-8 at byte offset " + std::to_string(bad));
  }
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  ParseOutcome out;
  if (format == FormatId::kTurtle) {
    parse_internal::ParseTurtle(bytes, mode, out);
  } else {
    parse_internal::ParseLineFormat(bytes, format == FormatId::kNQuads, mode, out);
  }
  return out;
}

namespace {

using Row = std::tuple<std::string, std::string, std::string>;

std::vector<Row> SortedRows(const Graph& g) {
  std::vector<Row> rows;
  rows.reserve(g.size());
  for (const Triple& t : g) {
    rows.emplace_back(ToNTriples(t.subject()), ToNTriples(t.predicate()),
                      ToNTriples(t.object()));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

void AppendRows(std::string& out, const std::vector<Row>& rows, const std::string* graph) {
  for (const auto& [s, p, o] : rows) {
    out += s;
    out += ' ';
    out += p;
    out += ' ';
    out += o;
    if (graph) {
      out += ' ';
      out += *graph;
    }
    out += " .\n";
  }
}

}  // namespace

std::string Serialize(const Dataset& dataset, FormatId format) {
  if (format != FormatId::kNTriples && format != FormatId::kNQuads) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "cannot serialize to " + std::string(FormatName(format)));
  }
  bool has_named = std::any_of(dataset.named_graphs.begin(), dataset.named_graphs.end(),
                               [](const auto& entry) { return !entry.second.empty(); });
  if (format == FormatId::kNTriples && has_named) {
    throw Error(ErrorCode::kUnsupportedFormat, "N-Triples cannot carry named graphs");
  }
  std::string out;
  AppendRows(out, SortedRows(dataset.default_graph), nullptr);
  if (format == FormatId::kNQuads) {
    std::vector<std::pair<std::string, const Graph*>> graphs;
    for (const auto& [name, g] : dataset.named_graphs) graphs.emplace_back(ToNTriples(name), &g);
    std::sort(graphs.begin(), graphs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [name, g] : graphs) AppendRows(out, SortedRows(*g), &name);
  }
  return out;
}

SerializationStats ComputeStats(std::string_view bytes, FormatId format) {
  ParseOutcome parsed = Parse(bytes, format, ParseMode::kStrict);
  if (parsed.has_errors()) {
    throw Error(ErrorCode::kParse, FormatDiagnostic(parsed.diagnostics.front()));
  }
  return SerializationStats{bytes.size(), parsed.dataset.statement_count(), format};
}

}  // namespace ldq
