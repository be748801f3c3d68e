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

#ifndef LDQ_RESULT_KIND_H_
#define LDQ_RESULT_KIND_H_

#include <optional>
#include <string_view>

namespace ldq {

// Shape of the value returned by a quality function.
enum class ResultKind { kBoolean, kRatio, kCount, kDuration, kSet, kScore, kNone };

std::string_view ResultKindName(ResultKind kind);
std::optional<ResultKind> ParseResultKind(std::string_view name);

}  // namespace ldq

#endif  // LDQ_RESULT_KIND_H_
