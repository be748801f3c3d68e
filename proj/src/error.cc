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

#include "ldq/error.h"

#include "ldq/result_kind.h"

namespace ldq {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStructural: return "structural-error";
    case ErrorCode::kUnsupportedFormat: return "unsupported-format";
    case ErrorCode::kUnknownFormat: return "unknown-format";
    case ErrorCode::kEncoding: return "encoding-error";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kUnknownCategory: return "unknown-category";
    case ErrorCode::kDerivation: return "derivation-error";
    case ErrorCode::kEmptyTarget: return "empty-target";
    case ErrorCode::kConfiguration: return "configuration-error";
    case ErrorCode::kIo: return "io-error";
  }
  return "error";
}

std::string_view ResultKindName(ResultKind kind) {
  switch (kind) {
    case ResultKind::kBoolean: return "boolean";
    case ResultKind::kRatio: return "ratio";
    case ResultKind::kCount: return "count";
    case ResultKind::kDuration: return "duration";
    case ResultKind::kSet: return "set";
    case ResultKind::kScore: return "score";
    case ResultKind::kNone: return "none";
  }
  return "none";
}

std::optional<ResultKind> ParseResultKind(std::string_view name) {
  for (ResultKind k : {ResultKind::kBoolean, ResultKind::kRatio, ResultKind::kCount,
                       ResultKind::kDuration, ResultKind::kSet, ResultKind::kScore,
                       ResultKind::kNone}) {
    if (ResultKindName(k) == name) return k;
  }
  return std::nullopt;
}

}  // namespace ldq
