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

#ifndef LDQ_PARSE_PARSERS_H_
#define LDQ_PARSE_PARSERS_H_

#include <string_view>

#include "ldq/parse/parser.h"

namespace ldq::parse_internal {

void ParseLineFormat(std::string_view bytes, bool quads, ParseMode mode, ParseOutcome& out);
void ParseTurtle(std::string_view bytes, ParseMode mode, ParseOutcome& out);

}  // namespace ldq::parse_internal

#endif  // LDQ_PARSE_PARSERS_H_
