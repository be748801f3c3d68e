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

#ifndef LDQ_PARSE_FORMAT_H_
#define LDQ_PARSE_FORMAT_H_

#include <optional>
#include <string>
#include <string_view>

namespace ldq {

enum class FormatId { kNTriples, kNQuads, kTurtle, kRdfXmlUnsupported, kUnknown };

std::string_view FormatName(FormatId id);
std::string_view MediaType(FormatId id);
std::optional<FormatId> ParseFormatName(std::string_view name);

// Format implied by a file name's extension, if any.
std::optional<FormatId> FormatFromExtension(std::string_view filename);

// Content sniffing alone: XML prolog or rdf:RDF root -> rdfxml-unsupported,
// @prefix/@base/PREFIX/BASE -> turtle, a four-term statement -> nquads,
// line-oriented terms -> ntriples, empty -> ntriples, anything else unknown.
FormatId SniffFormat(std::string_view bytes);

// The extension hint wins when the sniffed content is compatible with it
// (N-Triples content is valid Turtle and valid N-Quads); otherwise the
// sniffed format wins. An unrecognizable body defers to a recognized hint.
FormatId DetectFormat(std::string_view bytes, std::optional<std::string_view> filename_hint);

}  // namespace ldq

#endif  // LDQ_PARSE_FORMAT_H_
