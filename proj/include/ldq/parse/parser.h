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

#ifndef LDQ_PARSE_PARSER_H_
#define LDQ_PARSE_PARSER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ldq/parse/format.h"
#include "ldq/rdf/graph.h"

namespace ldq {

enum class Severity { kError, kWarning };

struct ParseDiagnostic {
  Severity severity = Severity::kError;
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in code points
  std::string message;
  std::string code;  // stable identifier, e.g. "missing-dot"
};

std::string FormatDiagnostic(const ParseDiagnostic& d);

enum class ParseMode {
  kStrict,   // first error aborts; the dataset is left empty
  kLenient,  // offending statements are skipped and reported
};

struct ParseOutcome {
  Dataset dataset;
  std::vector<ParseDiagnostic> diagnostics;

  bool has_errors() const;
};

// Parses N-Triples, N-Quads or the supported Turtle subset (prefixes, base,
// ';' and ',' abbreviations, the 'a' keyword, blank-node property lists,
// numeric and boolean shorthands; no collections).
// Throws kUnsupportedFormat for other formats and kEncoding, with the byte
// offset, for input that is not valid UTF-8.
ParseOutcome Parse(std::string_view bytes, FormatId format, ParseMode mode = ParseMode::kLenient);

// Deterministic N-Triples or N-Quads: UTF-8, LF endings, one statement per
// line, sorted by subject, predicate and object rendering. N-Quads emits the
// default graph first, then named graphs in name order. Throws
// kUnsupportedFormat for N-Triples output of a dataset with named graphs and
// for any other target format.
std::string Serialize(const Dataset& dataset, FormatId format);

struct SerializationStats {
  std::size_t byte_count = 0;
  std::size_t triple_count = 0;
  FormatId format = FormatId::kUnknown;
};

// Strict parse of `bytes`; throws kParse naming the first error position.
SerializationStats ComputeStats(std::string_view bytes, FormatId format);

// Byte offset of the first invalid UTF-8 sequence, or npos.
std::size_t FindInvalidUtf8(std::string_view bytes);

}  // namespace ldq

#endif  // LDQ_PARSE_PARSER_H_
