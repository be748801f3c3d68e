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

#ifndef LDQ_PARSE_CURSOR_H_
#define LDQ_PARSE_CURSOR_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace ldq::parse_internal {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

// Raised inside the parsers and caught at statement boundaries.
struct SyntaxError {
  Position where;
  std::string code;
  std::string message;
};

// Byte cursor tracking 1-based line and code-point column.
class Cursor {
 public:
  explicit Cursor(std::string_view input) : input_(input) {}

  bool at_end() const { return pos_ >= input_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < input_.size() ? input_[pos_ + ahead] : '\0';
  }
  bool has(std::size_t ahead) const { return pos_ + ahead < input_.size(); }
  bool starts_with(std::string_view s) const { return input_.substr(pos_).starts_with(s); }
  std::size_t offset() const { return pos_; }
  Position position() const { return position_; }
  std::string_view rest() const { return input_.substr(pos_); }

  char get() {
    char c = input_[pos_++];
    if (c == '\n') {
      ++position_.line;
      position_.column = 1;
    } else if (c == '\r') {
      if (peek() != '\n') {
        ++position_.line;
        position_.column = 1;
      }
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++position_.column;
    }
    return c;
  }

  void skip(std::size_t n) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) get();
  }

  [[noreturn]] void Fail(std::string code, std::string message) const {
    throw SyntaxError{position_, std::move(code), std::move(message)};
  }
  [[noreturn]] static void FailAt(Position where, std::string code, std::string message) {
    throw SyntaxError{where, std::move(code), std::move(message)};
  }

 private:
  std::string_view input_;
  std::size_t pos_ = 0;
  Position position_;
};

inline bool IsAsciiAlpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
inline bool IsHex(char c) {
  return IsAsciiDigit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}
inline bool IsHighByte(char c) { return static_cast<unsigned char>(c) >= 0x80; }

// PN_CHARS_U for ASCII, plus any non-ASCII byte.
inline bool IsNameStartChar(char c) { return IsAsciiAlpha(c) || c == '_' || IsHighByte(c); }
inline bool IsNameChar(char c) {
  return IsNameStartChar(c) || IsAsciiDigit(c) || c == '-';
}

void AppendUtf8(std::string& out, unsigned code_point);

// Reads the hex digits of a \u or \U escape (the backslash and letter are
// already consumed) and appends the decoded code point.
void ReadUchar(Cursor& cur, int digits, std::string& out, Position escape_start);

// Reads an IRIREF body after '<' (consumed) up to and including '>'.
std::string ReadIriRef(Cursor& cur, Position start);

// Reads a blank-node label after "_:" (consumed).
std::string ReadBlankLabel(Cursor& cur, Position start);

// Reads a language tag after '@' (consumed).
std::string ReadLangTag(Cursor& cur, Position start);

// Reads a short string literal body after the opening quote (consumed).
std::string ReadShortString(Cursor& cur, char quote, Position start);

}  // namespace ldq::parse_internal

#endif  // LDQ_PARSE_CURSOR_H_
