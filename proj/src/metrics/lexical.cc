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

// Lexical-form checks for the XML Schema datatypes the datatype-violation
// rule validates.

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "ldq/metrics/content.h"
#include "ldq/rdf/vocab.h"

namespace ldq {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), IsDigit);
}

std::string_view StripSign(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  return s;
}

bool IsInteger(std::string_view s) { return AllDigits(StripSign(s)); }

bool IsNonNegativeInteger(std::string_view s) {
  if (!s.empty() && s[0] == '-') return AllDigits(s.substr(1)) && s.find_first_not_of("-0") == std::string_view::npos;
  return IsInteger(s);
}

bool IsPositiveInteger(std::string_view s) {
  if (!IsNonNegativeInteger(s) || s[0] == '-') return false;
  return StripSign(s).find_first_not_of('0') != std::string_view::npos;
}

bool IsDecimal(std::string_view s) {
  s = StripSign(s);
  std::size_t dot = s.find('.');
  if (dot == std::string_view::npos) return AllDigits(s);
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = s.substr(dot + 1);
  if (whole.empty() && frac.empty()) return false;
  return (whole.empty() || AllDigits(whole)) && (frac.empty() || AllDigits(frac));
}

bool IsDouble(std::string_view s) {
  if (s == "INF" || s == "-INF" || s == "+INF" || s == "NaN") return true;
  std::size_t e = s.find_first_of("eE");
  if (e == std::string_view::npos) return IsDecimal(s);
  return IsDecimal(s.substr(0, e)) && IsInteger(s.substr(e + 1));
}

bool IsBoolean(std::string_view s) { return s == "true" || s == "false" || s == "1" || s == "0"; }

int DaysIn(int year, int month) {
  static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  return month == 2 && leap ? 29 : kDays[static_cast<std::size_t>(month - 1)];
}

// Optional 'Z' or +hh:mm / -hh:mm suffix.
bool IsTimezone(std::string_view s) {
  if (s.empty() || s == "Z") return true;
  if (s.size() != 6 || (s[0] != '+' && s[0] != '-') || s[3] != ':') return false;
  if (!AllDigits(s.substr(1, 2)) || !AllDigits(s.substr(4, 2))) return false;
  int hours = std::stoi(std::string(s.substr(1, 2)));
  int minutes = std::stoi(std::string(s.substr(4, 2)));
  return hours <= 14 && minutes <= 59;
}

// YYYY[Y*]-MM-DD, returning the rest of the string.
bool ParseDate(std::string_view s, std::string_view& rest) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  std::size_t dash = s.find('-');
  if (dash == std::string_view::npos || dash < 4 || !AllDigits(s.substr(0, dash))) return false;
  if (s.size() < dash + 6 || s[dash + 3] != '-') return false;
  std::string_view mm = s.substr(dash + 1, 2);
  std::string_view dd = s.substr(dash + 4, 2);
  if (!AllDigits(mm) || !AllDigits(dd)) return false;
  int year = std::stoi(std::string(s.substr(0, std::min<std::size_t>(dash, 9))));
  int month = std::stoi(std::string(mm));
  int day = std::stoi(std::string(dd));
  if (month < 1 || month > 12 || day < 1 || day > DaysIn(year, month)) return false;
  rest = s.substr(dash + 6);
  return true;
}

bool IsDate(std::string_view s) {
  std::string_view rest;
  return ParseDate(s, rest) && IsTimezone(rest);
}

bool IsDateTime(std::string_view s) {
  std::string_view rest;
  if (!ParseDate(s, rest) || rest.size() < 9 || rest[0] != 'T') return false;
  std::string_view time = rest.substr(1);
  if (time[2] != ':' || time[5] != ':') return false;
  if (!AllDigits(time.substr(0, 2)) || !AllDigits(time.substr(3, 2)) ||
      !AllDigits(time.substr(6, 2))) {
    return false;
  }
  int hours = std::stoi(std::string(time.substr(0, 2)));
  int minutes = std::stoi(std::string(time.substr(3, 2)));
  int seconds = std::stoi(std::string(time.substr(6, 2)));
  if (hours > 24 || minutes > 59 || seconds > 59) return false;
  std::string_view tail = time.substr(8);
  if (!tail.empty() && tail[0] == '.') {
    std::size_t end = tail.find_first_not_of("0123456789", 1);
    if (end == 1) return false;
    tail = end == std::string_view::npos ? std::string_view() : tail.substr(end);
  }
  return IsTimezone(tail);
}

bool IsGYear(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  std::size_t end = s.find_first_not_of("0123456789");
  std::string_view digits = s.substr(0, end);
  return digits.size() >= 4 && IsTimezone(end == std::string_view::npos ? "" : s.substr(end));
}

struct Validator {
  std::string_view local_name;
  bool (*check)(std::string_view);
};

constexpr Validator kValidators[] = {
    {"integer", IsInteger},
    {"int", IsInteger},
    {"long", IsInteger},
    {"short", IsInteger},
    {"byte", IsInteger},
    {"nonNegativeInteger", IsNonNegativeInteger},
    {"positiveInteger", IsPositiveInteger},
    {"decimal", IsDecimal},
    {"double", IsDouble},
    {"float", IsDouble},
    {"boolean", IsBoolean},
    {"date", IsDate},
    {"dateTime", IsDateTime},
    {"gYear", IsGYear},
};

const Validator* FindValidator(std::string_view datatype) {
  if (!datatype.starts_with(vocab::kXsd)) return nullptr;
  std::string_view local = datatype.substr(vocab::kXsd.size());
  for (const Validator& v : kValidators) {
    if (v.local_name == local) return &v;
  }
  return nullptr;
}

}  // namespace

bool HasLexicalValidator(std::string_view datatype) { return FindValidator(datatype) != nullptr; }

bool IsValidLexicalForm(std::string_view lexical, std::string_view datatype) {
  const Validator* v = FindValidator(datatype);
  return v == nullptr || v->check(lexical);
}

}  // namespace ldq
