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

#ifndef LDQ_METRICS_RESULT_H_
#define LDQ_METRICS_RESULT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldq/result_kind.h"

namespace ldq {

// Typed output of one metric operation.
//
//   boolean   value is 0 or 1
//   ratio     value in [0, 1]; numerator/denominator kept in components
//   count     value is a non-negative integer
//   duration  value in milliseconds
//   set       value is the member count; `universe` is the number of
//             possible members
//   score     value in [0, 1]
struct MetricResult {
  std::string category_id;
  std::string target;
  ResultKind kind = ResultKind::kNone;
  double value = 0.0;
  std::optional<double> universe;
  std::vector<std::string> members;
  // Secondary named outputs (p90_ms, numerator, instances, ...).
  std::map<std::string, double> components;
  // Justifying triples or terms, capped at kEvidenceCap; evidence_count is
  // the uncapped total.
  std::vector<std::string> evidence;
  std::size_t evidence_count = 0;
  std::vector<std::string> diagnostics;
  // How entailment or sampling was realized for this value.
  std::string mode;

  static constexpr std::size_t kEvidenceCap = 20;

  static MetricResult Boolean(bool value);
  // Throws kEmptyTarget when `denominator` is zero.
  static MetricResult Ratio(std::size_t numerator, std::size_t denominator,
                            const std::string& what);
  static MetricResult Count(std::size_t value);
  static MetricResult Duration(double milliseconds);
  static MetricResult Score(double value);
  static MetricResult Set(std::vector<std::string> members, std::size_t universe);

  void AddEvidence(std::string item);
};

}  // namespace ldq

#endif  // LDQ_METRICS_RESULT_H_
