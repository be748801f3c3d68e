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

#include <cctype>
#include <map>
#include <vector>

#include "cursor.h"
#include "ldq/error.h"
#include "ldq/parse/parser.h"
#include "parsers.h"

namespace ldq::parse_internal {
namespace {

enum class Tok {
  kEof,
  kIriRef,
  kPrefixedName,
  kBlankLabel,
  kString,
  kLangTag,
  kDatatypeMark,
  kInteger,
  kDecimal,
  kDouble,
  kTrue,
  kFalse,
  kA,
  kPrefixDirective,  // @prefix
  kBaseDirective,    // @base
  kSparqlPrefix,     // PREFIX
  kSparqlBase,       // BASE
  kDot,
  kSemicolon,
  kComma,
  kOpenBracket,
  kCloseBracket,
  kOpenParen,
  kCloseParen,
};

struct Token {
  Tok kind = Tok::kEof;
  Position where;
  std::string text;    // IRI, label, string value, tag, numeric lexical, prefix
  std::string local;   // local part of a prefixed name
};

bool IsLocalChar(char c) {
  return IsNameChar(c) || c == ':' || c == '.' || c == '%' || c == '\\';
}

constexpr std::string_view kLocalEscapable = "_~.-!$&'()*+,;=/?#@%";

class Lexer {
 public:
  explicit Lexer(std::string_view input) : cur_(input) {}

  Token Next() {
    SkipSpace();
    Token tok;
    tok.where = cur_.position();
    if (cur_.at_end()) {
      tok.kind = Tok::kEof;
      prev_ = tok.kind;
      return tok;
    }
    char c = cur_.peek();
    switch (c) {
      case '<':
        cur_.get();
        tok.kind = Tok::kIriRef;
        tok.text = ReadIriRef(cur_, tok.where);
        break;
      case '"':
      case '\'':
        tok.kind = Tok::kString;
        tok.text = ReadString(tok.where);
        break;
      case '@':
        cur_.get();
        if (prev_ != Tok::kString && Keyword("prefix")) {
          tok.kind = Tok::kPrefixDirective;
        } else if (prev_ != Tok::kString && Keyword("base")) {
          tok.kind = Tok::kBaseDirective;
        } else {
          tok.kind = Tok::kLangTag;
          tok.text = ReadLangTag(cur_, tok.where);
        }
        break;
      case '^':
        if (cur_.peek(1) != '^') cur_.Fail("unexpected-character", "expected '^^'");
        cur_.skip(2);
        tok.kind = Tok::kDatatypeMark;
        break;
      case '.':
        if (IsAsciiDigit(cur_.peek(1))) {
          ReadNumber(tok);
        } else {
          cur_.get();
          tok.kind = Tok::kDot;
        }
        break;
      case ';': cur_.get(); tok.kind = Tok::kSemicolon; break;
      case ',': cur_.get(); tok.kind = Tok::kComma; break;
      case '[': cur_.get(); tok.kind = Tok::kOpenBracket; break;
      case ']': cur_.get(); tok.kind = Tok::kCloseBracket; break;
      case '(': cur_.get(); tok.kind = Tok::kOpenParen; break;
      case ')': cur_.get(); tok.kind = Tok::kCloseParen; break;
      case '_':
        if (cur_.peek(1) == ':') {
          cur_.skip(2);
          tok.kind = Tok::kBlankLabel;
          tok.text = ReadBlankLabel(cur_, tok.where);
          break;
        }
        cur_.Fail("unexpected-character", "unexpected '_'");
      case ':':
        ReadPrefixedName(tok, "");
        break;
      default:
        if (IsAsciiDigit(c) || c == '+' || c == '-') {
          ReadNumber(tok);
        } else if (IsAsciiAlpha(c) || IsHighByte(c)) {
          ReadNameOrKeyword(tok);
        } else {
          cur_.Fail("unexpected-character", std::string("unexpected character '") + c + "'");
        }
    }
    prev_ = tok.kind;
    return tok;
  }

  // Skips one raw character; used for error recovery after a lexing failure.
  void SkipChar() {
    if (!cur_.at_end()) cur_.get();
  }
  bool at_end() const { return cur_.at_end(); }

 private:
  void SkipSpace() {
    while (!cur_.at_end()) {
      char c = cur_.peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        cur_.get();
      } else if (c == '#') {
        while (!cur_.at_end() && cur_.peek() != '\n' && cur_.peek() != '\r') cur_.get();
      } else {
        break;
      }
    }
  }

  bool Keyword(std::string_view word) {
    std::string_view rest = cur_.rest();
    if (!rest.starts_with(word)) return false;
    if (rest.size() > word.size() && IsNameChar(rest[word.size()])) return false;
    cur_.skip(word.size());
    return true;
  }

  std::string ReadString(Position start) {
    char quote = cur_.get();
    if (cur_.peek() == quote && cur_.peek(1) == quote) {
      cur_.skip(2);
      return ReadLongString(quote, start);
    }
    return ReadShortString(cur_, quote, start);
  }

  std::string ReadLongString(char quote, Position start) {
    std::string value;
    while (true) {
      if (cur_.at_end()) {
        Cursor::FailAt(start, "unterminated-literal", "long string literal is not closed");
      }
      if (cur_.peek() == quote && cur_.peek(1) == quote && cur_.peek(2) == quote &&
          cur_.peek(3) != quote) {
        cur_.skip(3);
        return value;
      }
      Position here = cur_.position();
      char c = cur_.get();
      if (c != '\\') {
        value += c;
        continue;
      }
      char e = cur_.at_end() ? '\0' : cur_.get();
      switch (e) {
        case 't': value += '\t'; break;
        case 'b': value += '\b'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u': ReadUchar(cur_, 4, value, here); break;
        case 'U': ReadUchar(cur_, 8, value, here); break;
        default: Cursor::FailAt(here, "invalid-escape", "unknown escape sequence in literal");
      }
    }
  }

  void ReadNumber(Token& tok) {
    std::string lex;
    if (cur_.peek() == '+' || cur_.peek() == '-') lex += cur_.get();
    while (IsAsciiDigit(cur_.peek())) lex += cur_.get();
    tok.kind = Tok::kInteger;
    if (cur_.peek() == '.' && IsAsciiDigit(cur_.peek(1))) {
      lex += cur_.get();
      while (IsAsciiDigit(cur_.peek())) lex += cur_.get();
      tok.kind = Tok::kDecimal;
    }
    if (cur_.peek() == 'e' || cur_.peek() == 'E') {
      lex += cur_.get();
      if (cur_.peek() == '+' || cur_.peek() == '-') lex += cur_.get();
      if (!IsAsciiDigit(cur_.peek())) {
        Cursor::FailAt(tok.where, "invalid-number", "malformed exponent");
      }
      while (IsAsciiDigit(cur_.peek())) lex += cur_.get();
      tok.kind = Tok::kDouble;
    }
    bool has_digit = false;
    for (char ch : lex) has_digit = has_digit || IsAsciiDigit(ch);
    if (!has_digit) Cursor::FailAt(tok.where, "invalid-number", "malformed number");
    tok.text = std::move(lex);
  }

  void ReadNameOrKeyword(Token& tok) {
    std::string name;
    while (!cur_.at_end() && (IsNameChar(cur_.peek()) || cur_.peek() == '.')) {
      if (cur_.peek() == '.' && !(IsNameChar(cur_.peek(1)) || cur_.peek(1) == '.')) break;
      name += cur_.get();
    }
    if (cur_.peek() == ':') {
      ReadPrefixedName(tok, std::move(name));
      return;
    }
    std::string upper = name;
    for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (name == "a") {
      tok.kind = Tok::kA;
    } else if (name == "true") {
      tok.kind = Tok::kTrue;
    } else if (name == "false") {
      tok.kind = Tok::kFalse;
    } else if (upper == "PREFIX") {
      tok.kind = Tok::kSparqlPrefix;
    } else if (upper == "BASE") {
      tok.kind = Tok::kSparqlBase;
    } else {
      Cursor::FailAt(tok.where, "unexpected-token", "unexpected word '" + name + "'");
    }
  }

  void ReadPrefixedName(Token& tok, std::string prefix) {
    cur_.get();  // ':'
    tok.kind = Tok::kPrefixedName;
    tok.text = std::move(prefix);
    std::string local;
    while (!cur_.at_end() && IsLocalChar(cur_.peek())) {
      char c = cur_.peek();
      if (c == '.') {
        char next = cur_.peek(1);
        if (!(IsLocalChar(next) && next != '\0')) break;
      }
      if (c == '\\') {
        Position here = cur_.position();
        cur_.get();
        char e = cur_.peek();
        if (cur_.at_end() || kLocalEscapable.find(e) == std::string_view::npos) {
          Cursor::FailAt(here, "invalid-escape", "invalid escape in local name");
        }
        local += cur_.get();
        continue;
      }
      if (c == '%') {
        if (!IsHex(cur_.peek(1)) || !IsHex(cur_.peek(2))) {
          cur_.Fail("invalid-escape", "malformed percent-encoding in local name");
        }
      }
      local += cur_.get();
    }
    tok.local = std::move(local);
  }

  Cursor cur_;
  Tok prev_ = Tok::kEof;
};

std::string RemoveDotSegments(std::string_view path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  bool leading = !path.empty() && path[0] == '/';
  bool trailing = false;
  while (i <= path.size()) {
    std::size_t j = path.find('/', i);
    if (j == std::string_view::npos) j = path.size();
    std::string_view seg = path.substr(i, j - i);
    trailing = false;
    if (seg == "..") {
      if (!out.empty()) out.pop_back();
      trailing = true;
    } else if (seg == ".") {
      trailing = true;
    } else if (!(seg.empty() && i == 0 && leading)) {
      out.emplace_back(seg);
    }
    i = j + 1;
  }
  std::string result = leading ? "/" : "";
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k) result += '/';
    result += out[k];
  }
  if (trailing && (result.empty() || result.back() != '/')) result += '/';
  return result;
}

// Reference resolution against an absolute base IRI.
std::string Resolve(std::string_view base, std::string_view ref) {
  std::size_t colon = base.find(':');
  std::string_view scheme = base.substr(0, colon);
  std::string_view after_scheme = base.substr(colon + 1);
  std::string_view authority;
  std::string_view path = after_scheme;
  if (after_scheme.starts_with("//")) {
    std::size_t end = after_scheme.find_first_of("/?#", 2);
    if (end == std::string_view::npos) end = after_scheme.size();
    authority = after_scheme.substr(0, end);
    path = after_scheme.substr(end);
  }
  std::size_t qf = path.find_first_of("?#");
  std::string_view base_path = path.substr(0, qf == std::string_view::npos ? path.size() : qf);
  std::string_view base_query;
  if (qf != std::string_view::npos && path[qf] == '?') {
    std::size_t hash = path.find('#', qf);
    base_query = path.substr(qf, hash == std::string_view::npos ? path.size() - qf : hash - qf);
  }
  std::string prefix = std::string(scheme) + ":" + std::string(authority);
  if (ref.empty()) return prefix + std::string(base_path) + std::string(base_query);
  if (ref.starts_with("//")) return std::string(scheme) + ":" + std::string(ref);
  if (ref[0] == '#') return prefix + std::string(base_path) + std::string(base_query) + std::string(ref);
  if (ref[0] == '?') return prefix + std::string(base_path) + std::string(ref);
  std::size_t ref_qf = ref.find_first_of("?#");
  std::string_view ref_path = ref.substr(0, ref_qf == std::string_view::npos ? ref.size() : ref_qf);
  std::string_view ref_tail = ref_qf == std::string_view::npos ? std::string_view() : ref.substr(ref_qf);
  std::string merged;
  if (ref_path.starts_with("/")) {
    merged = std::string(ref_path);
  } else {
    std::size_t slash = base_path.rfind('/');
    if (slash == std::string_view::npos) {
      merged = (authority.empty() ? "" : "/") + std::string(ref_path);
    } else {
      merged = std::string(base_path.substr(0, slash + 1)) + std::string(ref_path);
    }
  }
  return prefix + RemoveDotSegments(merged) + std::string(ref_tail);
}

class TurtleParser {
 public:
  TurtleParser(std::string_view input, ParseMode mode, ParseOutcome& out)
      : lexer_(input), mode_(mode), out_(out) {}

  void Run() {
    Advance();
    while (tok_.kind != Tok::kEof) {
      pending_.clear();
      try {
        Statement();
        for (Triple& t : pending_) out_.dataset.default_graph.Insert(std::move(t));
      } catch (const SyntaxError& e) {
        out_.diagnostics.push_back(
            ParseDiagnostic{Severity::kError, e.where.line, e.where.column, e.message, e.code});
        if (mode_ == ParseMode::kStrict) {
          out_.dataset = Dataset{};
          return;
        }
        Recover();
      }
    }
  }

 private:
  void Advance() { tok_ = lexer_.Next(); }

  [[noreturn]] void Unexpected(const char* expected) {
    Cursor::FailAt(tok_.where, tok_.kind == Tok::kEof ? "unexpected-eof" : "unexpected-token",
                   std::string("expected ") + expected);
  }

  void Expect(Tok kind, const char* what) {
    if (tok_.kind != kind) {
      if (kind == Tok::kDot) {
        Cursor::FailAt(tok_.where, "missing-dot", "statement is not terminated by '.'");
      }
      Unexpected(what);
    }
    Advance();
  }

  // Skips to just past the next top-level '.'.
  void Recover() {
    int depth = 0;
    while (true) {
      try {
        if (tok_.kind == Tok::kEof) return;
        if (tok_.kind == Tok::kOpenBracket || tok_.kind == Tok::kOpenParen) ++depth;
        if ((tok_.kind == Tok::kCloseBracket || tok_.kind == Tok::kCloseParen) && depth > 0) --depth;
        bool stop = tok_.kind == Tok::kDot && depth == 0;
        Advance();
        if (stop) return;
      } catch (const SyntaxError&) {
        lexer_.SkipChar();
        if (lexer_.at_end()) {
          tok_ = Token{};
          return;
        }
      }
    }
  }

  void Statement() {
    switch (tok_.kind) {
      case Tok::kPrefixDirective:
        Advance();
        PrefixBody();
        Expect(Tok::kDot, "'.'");
        return;
      case Tok::kSparqlPrefix:
        Advance();
        PrefixBody();
        return;
      case Tok::kBaseDirective:
        Advance();
        BaseBody();
        Expect(Tok::kDot, "'.'");
        return;
      case Tok::kSparqlBase:
        Advance();
        BaseBody();
        return;
      default:
        Triples();
        Expect(Tok::kDot, "'.'");
    }
  }

  void PrefixBody() {
    if (tok_.kind != Tok::kPrefixedName || !tok_.local.empty()) Unexpected("a prefix name");
    std::string prefix = tok_.text;
    Advance();
    if (tok_.kind != Tok::kIriRef) Unexpected("an IRI");
    prefixes_[prefix] = ResolveIri(tok_.text, tok_.where);
    Advance();
  }

  void BaseBody() {
    if (tok_.kind != Tok::kIriRef) Unexpected("an IRI");
    base_ = ResolveIri(tok_.text, tok_.where);
    Advance();
  }

  std::string ResolveIri(const std::string& ref, Position where) {
    if (IsAbsoluteIri(ref)) return ref;
    if (base_.empty()) {
      Cursor::FailAt(where, "relative-iri", "relative IRI <" + ref + "> without a base");
    }
    return Resolve(base_, ref);
  }

  Term Iri() {
    Term t = TermFromIriToken();
    Advance();
    return t;
  }

  Term TermFromIriToken() {
    if (tok_.kind == Tok::kIriRef) return Term::Iri(ResolveIri(tok_.text, tok_.where));
    auto it = prefixes_.find(tok_.text);
    if (it == prefixes_.end()) {
      Cursor::FailAt(tok_.where, "undefined-prefix", "undefined prefix '" + tok_.text + ":'");
    }
    std::string iri = it->second + tok_.local;
    if (!IsAbsoluteIri(iri)) {
      Cursor::FailAt(tok_.where, "relative-iri", "prefixed name expands to a relative IRI");
    }
    return Term::Iri(std::move(iri));
  }

  Term FreshBlank() { return Term::Blank("genid-" + std::to_string(++blank_counter_)); }

  void Triples() {
    if (tok_.kind == Tok::kOpenBracket) {
      Term subject = BlankNodePropertyList();
      if (tok_.kind != Tok::kDot) PredicateObjectList(subject);
      return;
    }
    Term subject = Subject();
    PredicateObjectList(subject);
  }

  Term Subject() {
    switch (tok_.kind) {
      case Tok::kIriRef:
      case Tok::kPrefixedName:
        return Iri();
      case Tok::kBlankLabel: {
        Term t = Term::Blank(tok_.text);
        Advance();
        return t;
      }
      case Tok::kOpenParen:
        Cursor::FailAt(tok_.where, "unsupported-collection", "collections are not supported");
      case Tok::kString:
      case Tok::kInteger:
      case Tok::kDecimal:
      case Tok::kDouble:
      case Tok::kTrue:
      case Tok::kFalse:
        Cursor::FailAt(tok_.where, "literal-subject", "a literal cannot be a subject");
      default:
        Unexpected("a subject");
    }
  }

  Term Verb() {
    switch (tok_.kind) {
      case Tok::kA:
        Advance();
        return Term::Iri(std::string(vocab::kRdfType));
      case Tok::kIriRef:
      case Tok::kPrefixedName:
        return Iri();
      case Tok::kBlankLabel:
      case Tok::kOpenBracket:
        Cursor::FailAt(tok_.where, "bnode-predicate", "a blank node cannot be a predicate");
      case Tok::kString:
      case Tok::kInteger:
      case Tok::kDecimal:
      case Tok::kDouble:
      case Tok::kTrue:
      case Tok::kFalse:
        Cursor::FailAt(tok_.where, "literal-predicate", "a literal cannot be a predicate");
      default:
        Unexpected("a predicate");
    }
  }

  void PredicateObjectList(const Term& subject) {
    while (true) {
      Term predicate = Verb();
      ObjectList(subject, predicate);
      if (tok_.kind != Tok::kSemicolon) return;
      while (tok_.kind == Tok::kSemicolon) Advance();
      if (tok_.kind == Tok::kDot || tok_.kind == Tok::kCloseBracket) return;
    }
  }

  void ObjectList(const Term& subject, const Term& predicate) {
    while (true) {
      Term object = Object();
      pending_.emplace_back(subject, predicate, std::move(object));
      if (tok_.kind != Tok::kComma) return;
      Advance();
    }
  }

  Term BlankNodePropertyList() {
    Advance();  // '['
    Term node = FreshBlank();
    if (tok_.kind != Tok::kCloseBracket) PredicateObjectList(node);
    Expect(Tok::kCloseBracket, "']'");
    return node;
  }

  Term Object() {
    switch (tok_.kind) {
      case Tok::kIriRef:
      case Tok::kPrefixedName:
        return Iri();
      case Tok::kBlankLabel: {
        Term t = Term::Blank(tok_.text);
        Advance();
        return t;
      }
      case Tok::kOpenBracket:
        return BlankNodePropertyList();
      case Tok::kOpenParen:
        Cursor::FailAt(tok_.where, "unsupported-collection", "collections are not supported");
      case Tok::kString:
        return StringLiteral();
      case Tok::kInteger: return Numeric(vocab::kXsdInteger);
      case Tok::kDecimal: return Numeric(vocab::kXsdDecimal);
      case Tok::kDouble: return Numeric(vocab::kXsdDouble);
      case Tok::kTrue:
        Advance();
        return Term::Literal("true", std::string(vocab::kXsdBoolean));
      case Tok::kFalse:
        Advance();
        return Term::Literal("false", std::string(vocab::kXsdBoolean));
      default:
        Unexpected("an object");
    }
  }

  Term Numeric(std::string_view datatype) {
    Term t = Term::Literal(tok_.text, std::string(datatype));
    Advance();
    return t;
  }

  Term StringLiteral() {
    std::string lexical = tok_.text;
    Advance();
    if (tok_.kind == Tok::kLangTag) {
      std::string tag = tok_.text;
      Advance();
      return Term::LangLiteral(std::move(lexical), std::move(tag));
    }
    if (tok_.kind == Tok::kDatatypeMark) {
      Advance();
      if (tok_.kind != Tok::kIriRef && tok_.kind != Tok::kPrefixedName) {
        Unexpected("a datatype IRI");
      }
      Position where = tok_.where;
      Term dt = Iri();
      if (dt.value() == vocab::kRdfLangString) {
        Cursor::FailAt(where, "invalid-datatype", "rdf:langString requires a language tag");
      }
      return Term::Literal(std::move(lexical), dt.value());
    }
    return Term::Literal(std::move(lexical));
  }

  Lexer lexer_;
  ParseMode mode_;
  ParseOutcome& out_;
  Token tok_;
  std::map<std::string, std::string> prefixes_;
  std::string base_;
  std::vector<Triple> pending_;
  std::size_t blank_counter_ = 0;
};

}  // namespace

void ParseTurtle(std::string_view bytes, ParseMode mode, ParseOutcome& out) {
  TurtleParser(bytes, mode, out).Run();
}

}  // namespace ldq::parse_internal
