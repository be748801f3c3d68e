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

#include "cursor.h"

#include "ldq/rdf/term.h"

namespace ldq::parse_internal {

void AppendUtf8(std::string& out, unsigned cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

void ReadUchar(Cursor& cur, int digits, std::string& out, Position escape_start) {
  unsigned cp = 0;
  for (int i = 0; i < digits; ++i) {
    char c = cur.peek();
    if (cur.at_end() || !IsHex(c)) {
      Cursor::FailAt(escape_start, "invalid-escape", "malformed \\u or \\U escape");
    }
    cur.get();
    cp = cp * 16 + static_cast<unsigned>(IsAsciiDigit(c) ? c - '0' : (c | 0x20) - 'a' + 10);
  }
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    Cursor::FailAt(escape_start, "invalid-escape", "escape denotes an invalid code point");
  }
  AppendUtf8(out, cp);
}

std::string ReadIriRef(Cursor& cur, Position start) {
  std::string iri;
  while (true) {
    if (cur.at_end() || cur.peek() == '\n' || cur.peek() == '\r') {
      Cursor::FailAt(start, "unterminated-iri", "IRI is missing its closing '>'");
    }
    Position here = cur.position();
    char c = cur.get();
    if (c == '>') break;
    if (c == '\\') {
      char kind = cur.at_end() ? '\0' : cur.get();
      if (kind == 'u') {
        ReadUchar(cur, 4, iri, here);
      } else if (kind == 'U') {
        ReadUchar(cur, 8, iri, here);
      } else {
        Cursor::FailAt(here, "invalid-escape", "only \\u and \\U escapes are allowed in IRIs");
      }
      continue;
    }
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
        c == '`') {
      Cursor::FailAt(here, "invalid-iri-char", "character not allowed in an IRI");
    }
    iri += c;
  }
  return iri;
}

std::string ReadBlankLabel(Cursor& cur, Position start) {
  std::string_view rest = cur.rest();
  std::size_t n = 0;
  if (n < rest.size() && (IsNameStartChar(rest[n]) || IsAsciiDigit(rest[n]))) {
    ++n;
    while (n < rest.size() && (IsNameChar(rest[n]) || rest[n] == '.')) ++n;
    while (n > 1 && rest[n - 1] == '.') --n;
  }
  if (n == 0) Cursor::FailAt(start, "invalid-blank-node", "malformed blank node label");
  std::string label(rest.substr(0, n));
  cur.skip(n);
  return label;
}

std::string ReadLangTag(Cursor& cur, Position start) {
  std::string tag;
  while (!cur.at_end() && (IsAsciiAlpha(cur.peek()) || IsAsciiDigit(cur.peek()) ||
                           cur.peek() == '-')) {
    tag += cur.get();
  }
  if (!IsValidLanguageTag(tag)) {
    Cursor::FailAt(start, "invalid-language-tag", "malformed language tag '" + tag + "'");
  }
  return tag;
}

std::string ReadShortString(Cursor& cur, char quote, Position start) {
  std::string value;
  while (true) {
    if (cur.at_end() || cur.peek() == '\n' || cur.peek() == '\r') {
      Cursor::FailAt(start, "unterminated-literal", "string literal is not closed");
    }
    Position here = cur.position();
    char c = cur.get();
    if (c == quote) break;
    if (c != '\\') {
      value += c;
      continue;
    }
    char e = cur.at_end() ? '\0' : cur.get();
    switch (e) {
      case 't': value += '\t'; break;
      case 'b': value += '\b'; break;
      case 'n': value += '\n'; break;
      case 'r': value += '\r'; break;
      case 'f': value += '\f'; break;
      case '"': value += '"'; break;
      case '\'': value += '\''; break;
      case '\\': value += '\\'; break;
      case 'u': ReadUchar(cur, 4, value, here); break;
      case 'U': ReadUchar(cur, 8, value, here); break;
      default: Cursor::FailAt(here, "invalid-escape", "unknown escape sequence in literal");
    }
  }
  return value;
}

}  // namespace ldq::parse_internal
