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

#ifndef LDQ_METRICS_CONTAINER_H_
#define LDQ_METRICS_CONTAINER_H_

#include <chrono>
#include <cstdint>
#include <istream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ldq/metrics/result.h"
#include "ldq/rdf/graph.h"

namespace ldq {

// One observation of one target. success implies latency_ms <= the timeout
// the probe ran with.
struct ProbeOutcome {
  std::int64_t timestamp_ms = 0;
  std::string target;
  bool success = false;
  // HTTP status / 100, absent when no response arrived.
  std::optional<int> status_class;
  double latency_ms = 0.0;
  std::optional<std::string> media_type;

  friend bool operator==(const ProbeOutcome&, const ProbeOutcome&) = default;
};

// Ordered outcomes; timestamps are non-decreasing per target.
using ProbeLog = std::vector<ProbeOutcome>;

class ProbeTransport {
 public:
  virtual ~ProbeTransport() = default;
  virtual ProbeOutcome Fetch(const std::string& url, std::string_view accept,
                             std::chrono::milliseconds timeout) = 0;
};

// RDF media types in preference order, then */*;q=0.1.
std::string_view DefaultAcceptHeader();
// Compares the type/subtype part only, case-insensitively.
bool IsRdfMediaType(std::string_view media_type);

// Replays scripted responses. Each target cycles through its own entries;
// the entry for target "*" answers unlisted targets. The virtual clock
// starts at 0 and advances 1000 ms per fetch. A scripted success slower
// than the timeout is reported as a failure without a status.
class FixtureTransport : public ProbeTransport {
 public:
  struct Response {
    bool success = true;
    std::optional<int> status_class;
    double latency_ms = 0.0;
    std::optional<std::string> media_type;
  };

  FixtureTransport() = default;
  void Script(const std::string& target, Response response);
  // Line-delimited JSON, one {"target", "success", "status_class",
  // "latency_ms", "media_type"} object per line. Throws kConfiguration.
  void LoadJsonLines(std::istream& in);

  ProbeOutcome Fetch(const std::string& url, std::string_view accept,
                     std::chrono::milliseconds timeout) override;
  std::size_t fetch_count() const;

 private:
  struct Cursor {
    std::vector<Response> responses;
    std::size_t next = 0;
  };

  mutable std::mutex mu_;
  std::map<std::string, Cursor> script_;
  std::int64_t clock_ms_ = 0;
  std::size_t fetches_ = 0;
};

// Throws kIo on every fetch so tests prove no live access happens.
class ForbiddenTransport : public ProbeTransport {
 public:
  ProbeOutcome Fetch(const std::string& url, std::string_view accept,
                     std::chrono::milliseconds timeout) override;
};

struct ProbeOptions {
  std::chrono::milliseconds timeout{10000};
  // Upper bound on concurrent fetches; 1 probes in target order.
  std::size_t parallelism = 1;
};

// Fetches every target once. Transport exceptions become failed outcomes.
// The result is ordered by (timestamp, target).
ProbeLog ProbeTargets(ProbeTransport& transport, const std::vector<std::string>& targets,
                      const ProbeOptions& options = {});

// JSONL persistence: one {"timestamp", "target", "success", "status_class",
// "latency_ms", "media_type"} object per line.
std::string ProbeOutcomeToJson(const ProbeOutcome& outcome);
// Throws kParse naming the line on malformed records, and kStructural when a
// target's timestamps decrease.
ProbeLog ReadProbeLog(std::istream& in);
void WriteProbeLog(std::ostream& out, const ProbeLog& log);
// Throws kStructural when some target's timestamps decrease.
void CheckProbeLog(const ProbeLog& log);

// Distinct http(s) IRI subjects, sorted, then shuffled with mt19937_64
// seeded by `seed`; the first min(n, size) are kept.
std::vector<std::string> SampleHttpSubjects(const Graph& graph, std::size_t n, std::uint64_t seed);

// Sampled subjects fetched successfully with an RDF media type / sampled.
// Throws kEmptyTarget without http subjects.
MetricResult Dereferenceability(const Graph& graph, std::size_t sample_size,
                                ProbeTransport& transport, std::uint64_t seed,
                                const ProbeOptions& options = {});
// The same over an existing probe log.
MetricResult DereferenceabilityOfLog(const ProbeLog& log);

// Successful outcomes / outcomes. Throws kEmptyTarget on an empty log.
MetricResult Availability(const ProbeLog& log);

struct ResponseTimeStats {
  std::size_t successes = 0;
  // Lower of the two middle values for even counts.
  double median_ms = 0.0;
  // Nearest rank: the ceil(0.9 n)-th smallest.
  double p90_ms = 0.0;
  double max_ms = 0.0;
};
// Over successful outcomes only. Throws kEmptyTarget without a success.
ResponseTimeStats ComputeResponseTimeStats(const ProbeLog& log);
// Duration result valued at the median.
MetricResult ResponseTimeResult(const ResponseTimeStats& stats);

// Outcomes fall in window floor((t - t0) / window) where t0 is the earliest
// timestamp; the score is the mean availability of non-empty windows.
// Throws kEmptyTarget on an empty log and kConfiguration on a non-positive
// window.
MetricResult Robustness(const ProbeLog& log, std::chrono::milliseconds window);

// Access method name to the properties declaring it.
using AccessMethodProperties = std::map<std::string, std::vector<std::string>>;
// data-dump, sparql-endpoint, dereferenceable-resources and api, from VoID,
// DCAT, SPARQL service description and Hydra terms.
const AccessMethodProperties& DefaultAccessMethodProperties();
// Set result over the methods of `properties`; a method is present when any
// statement uses one of its properties.
MetricResult AccessibilityMethods(const Dataset& dataset,
                                  const AccessMethodProperties& properties =
                                      DefaultAccessMethodProperties());

// External object IRIs of `a` that `b` has as subjects / external object
// IRIs of `a`, where external means not a subject of `a`. Throws
// kEmptyTarget when `a` has none.
MetricResult Connectedness(const Graph& a, const Graph& b);

}  // namespace ldq

#endif  // LDQ_METRICS_CONTAINER_H_
