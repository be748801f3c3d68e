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

#include "ldq/metrics/result.h"

#include "ldq/error.h"

namespace ldq {

MetricResult MetricResult::Boolean(bool value) {
  MetricResult r;
  r.kind = ResultKind::kBoolean;
  r.value = value ? 1.0 : 0.0;
  return r;
}

MetricResult MetricResult::Ratio(std::size_t numerator, std::size_t denominator,
                                 const std::string& what) {
  if (denominator == 0) throw Error(ErrorCode::kEmptyTarget, "no " + what + " to measure");
  MetricResult r;
  r.kind = ResultKind::kRatio;
  r.value = static_cast<double>(numerator) / static_cast<double>(denominator);
  r.components["numerator"] = static_cast<double>(numerator);
  r.components["denominator"] = static_cast<double>(denominator);
  return r;
}

MetricResult MetricResult::Count(std::size_t value) {
  MetricResult r;
  r.kind = ResultKind::kCount;
  r.value = static_cast<double>(value);
  return r;
}

MetricResult MetricResult::Duration(double milliseconds) {
  MetricResult r;
  r.kind = ResultKind::kDuration;
  r.value = milliseconds;
  return r;
}

MetricResult MetricResult::Score(double value) {
  MetricResult r;
  r.kind = ResultKind::kScore;
  r.value = value;
  return r;
}

MetricResult MetricResult::Set(std::vector<std::string> members, std::size_t universe) {
  MetricResult r;
  r.kind = ResultKind::kSet;
  r.value = static_cast<double>(members.size());
  r.universe = static_cast<double>(universe);
  r.members = std::move(members);
  return r;
}

void MetricResult::AddEvidence(std::string item) {
  ++evidence_count;
  if (evidence.size() < kEvidenceCap) evidence.push_back(std::move(item));
}

}  // namespace ldq
