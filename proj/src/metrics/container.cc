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

#include "ldq/metrics/container.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "json.hpp"
#include "ldq/error.h"
#include "ldq/rdf/vocab.h"

namespace ldq {
namespace {

constexpr std::string_view kRdfMediaTypes[] = {
    "text/turtle",         "application/n-triples", "application/n-quads",
    "application/rdf+xml", "application/ld+json",   "application/trig",
    "text/n3",
};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> OptionalField(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return it->get<T>();
}

ProbeOutcome OutcomeFromJson(const nlohmann::json& j) {
  ProbeOutcome o;
  o.timestamp_ms = j.at("timestamp").get<std::int64_t>();
  o.target = j.at("target").get<std::string>();
  o.success = j.at("success").get<bool>();
  o.status_class = OptionalField<int>(j, "status_class");
  o.latency_ms = j.value("latency_ms", 0.0);
  o.media_type = OptionalField<std::string>(j, "media_type");
  return o;
}

std::string Percent(std::size_t n, std::size_t d) {
  return std::to_string(n) + "/" + std::to_string(d);
}

}  // namespace

std::string_view DefaultAcceptHeader() {
  return "text/turtle, application/n-triples;q=0.95, application/n-quads;q=0.9, "
         "application/rdf+xml;q=0.8, application/ld+json;q=0.7, */*;q=0.1";
}

bool IsRdfMediaType(std::string_view media_type) {
  std::string base = Lower(Trim(media_type.substr(0, media_type.find(';'))));
  return std::find(std::begin(kRdfMediaTypes), std::end(kRdfMediaTypes), base) !=
         std::end(kRdfMediaTypes);
}

void FixtureTransport::Script(const std::string& target, Response response) {
  std::lock_guard lock(mu_);
  script_[target].responses.push_back(std::move(response));
}

void FixtureTransport::LoadJsonLines(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      Response r;
      r.success = j.value("success", true);
      r.status_class = OptionalField<int>(j, "status_class");
      r.latency_ms = j.value("latency_ms", 0.0);
      r.media_type = OptionalField<std::string>(j, "media_type");
      Script(j.at("target").get<std::string>(), std::move(r));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kConfiguration,
                  "fixture script line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

ProbeOutcome FixtureTransport::Fetch(const std::string& url, std::string_view,
                                     std::chrono::milliseconds timeout) {
  std::lock_guard lock(mu_);
  ProbeOutcome o;
  o.target = url;
  o.timestamp_ms = clock_ms_;
  clock_ms_ += 1000;
  ++fetches_;
  auto it = script_.find(url);
  if (it == script_.end()) it = script_.find("*");
  if (it == script_.end() || it->second.responses.empty()) {
    o.latency_ms = 0.0;
    return o;
  }
  Cursor& cursor = it->second;
  const Response& r = cursor.responses[cursor.next];
  cursor.next = (cursor.next + 1) % cursor.responses.size();
  auto limit = static_cast<double>(timeout.count());
  if (r.latency_ms > limit) {
    o.latency_ms = limit;
    return o;
  }
  o.success = r.success;
  o.status_class = r.status_class;
  o.latency_ms = r.latency_ms;
  o.media_type = r.media_type;
  return o;
}

std::size_t FixtureTransport::fetch_count() const {
  std::lock_guard lock(mu_);
  return fetches_;
}

ProbeOutcome ForbiddenTransport::Fetch(const std::string& url, std::string_view,
                                       std::chrono::milliseconds) {
  throw Error(ErrorCode::kIo, "live network access is forbidden here (target " + url + ")");
}

ProbeLog ProbeTargets(ProbeTransport& transport, const std::vector<std::string>& targets,
                      const ProbeOptions& options) {
  std::vector<ProbeOutcome> out(targets.size());
  auto probe = [&](std::size_t i) {
    try {
      out[i] = transport.Fetch(targets[i], DefaultAcceptHeader(), options.timeout);
    } catch (const std::exception&) {
      out[i] = ProbeOutcome{};
      out[i].target = targets[i];
      out[i].latency_ms = static_cast<double>(options.timeout.count());
    }
  };
  std::size_t workers = std::min(std::max<std::size_t>(options.parallelism, 1), targets.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < targets.size(); ++i) probe(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < targets.size(); i = next++) probe(i);
      });
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const ProbeOutcome& a, const ProbeOutcome& b) {
    return std::tie(a.timestamp_ms, a.target) < std::tie(b.timestamp_ms, b.target);
  });
  return out;
}

std::string ProbeOutcomeToJson(const ProbeOutcome& o) {
  nlohmann::ordered_json j;
  j["timestamp"] = o.timestamp_ms;
  j["target"] = o.target;
  j["success"] = o.success;
  j["status_class"] = o.status_class ? nlohmann::ordered_json(*o.status_class) : nullptr;
  j["latency_ms"] = o.latency_ms;
  j["media_type"] = o.media_type ? nlohmann::ordered_json(*o.media_type) : nullptr;
  return j.dump();
}

void CheckProbeLog(const ProbeLog& log) {
  std::map<std::string, std::int64_t> last;
  for (const ProbeOutcome& o : log) {
    auto [it, inserted] = last.try_emplace(o.target, o.timestamp_ms);
    if (!inserted) {
      if (o.timestamp_ms < it->second) {
        throw Error(ErrorCode::kStructural,
                    "probe log timestamps decrease for target " + o.target);
      }
      it->second = o.timestamp_ms;
    }
  }
}

ProbeLog ReadProbeLog(std::istream& in) {
  ProbeLog log;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    try {
      log.push_back(OutcomeFromJson(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse,
                  "probe log line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  CheckProbeLog(log);
  return log;
}

void WriteProbeLog(std::ostream& out, const ProbeLog& log) {
  for (const ProbeOutcome& o : log) out << ProbeOutcomeToJson(o) << '\n';
}

std::vector<std::string> SampleHttpSubjects(const Graph& graph, std::size_t n,
                                            std::uint64_t seed) {
  std::set<std::string> distinct;
  for (const Term& s : graph.subjects()) {
    if (s.is_iri() && (s.value().starts_with("http://") || s.value().starts_with("https://"))) {
      distinct.insert(s.value());
    }
  }
  std::vector<std::string> pool(distinct.begin(), distinct.end());
  // Explicit Fisher-Yates: std::shuffle is not portable across libraries.
  std::mt19937_64 rng(seed);
  for (std::size_t i = pool.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(pool[i - 1], pool[j]);
  }
  pool.resize(std::min(n, pool.size()));
  return pool;
}

MetricResult DereferenceabilityOfLog(const ProbeLog& log) {
  std::size_t ok = 0;
  for (const ProbeOutcome& o : log) {
    if (o.success && o.media_type && IsRdfMediaType(*o.media_type)) ++ok;
  }
  MetricResult r = MetricResult::Ratio(ok, log.size(), "sampled http subjects");
  for (const ProbeOutcome& o : log) {
    if (!(o.success && o.media_type && IsRdfMediaType(*o.media_type))) {
      r.AddEvidence(o.target);
    }
  }
  r.mode = "probe";
  return r;
}

MetricResult Dereferenceability(const Graph& graph, std::size_t sample_size,
                                ProbeTransport& transport, std::uint64_t seed,
                                const ProbeOptions& options) {
  std::vector<std::string> sample = SampleHttpSubjects(graph, sample_size, seed);
  if (sample.empty()) throw Error(ErrorCode::kEmptyTarget, "no http subjects to dereference");
  MetricResult r = DereferenceabilityOfLog(ProbeTargets(transport, sample, options));
  r.components["seed"] = static_cast<double>(seed);
  return r;
}

MetricResult Availability(const ProbeLog& log) {
  std::size_t ok = static_cast<std::size_t>(
      std::count_if(log.begin(), log.end(), [](const ProbeOutcome& o) { return o.success; }));
  MetricResult r = MetricResult::Ratio(ok, log.size(), "probe outcomes");
  r.mode = "probe frequency";
  r.AddEvidence(Percent(ok, log.size()) + " probes succeeded");
  return r;
}

ResponseTimeStats ComputeResponseTimeStats(const ProbeLog& log) {
  std::vector<double> latencies;
  for (const ProbeOutcome& o : log) {
    if (o.success) latencies.push_back(o.latency_ms);
  }
  if (latencies.empty()) throw Error(ErrorCode::kEmptyTarget, "no successful probes to time");
  std::sort(latencies.begin(), latencies.end());
  std::size_t n = latencies.size();
  ResponseTimeStats s;
  s.successes = n;
  s.median_ms = latencies[(n - 1) / 2];
  auto rank = static_cast<std::size_t>(std::ceil(0.9 * static_cast<double>(n)));
  s.p90_ms = latencies[std::max<std::size_t>(rank, 1) - 1];
  s.max_ms = latencies.back();
  return s;
}

MetricResult ResponseTimeResult(const ResponseTimeStats& stats) {
  MetricResult r = MetricResult::Duration(stats.median_ms);
  r.components["median_ms"] = stats.median_ms;
  r.components["p90_ms"] = stats.p90_ms;
  r.components["max_ms"] = stats.max_ms;
  r.components["successes"] = static_cast<double>(stats.successes);
  r.mode = "successful probes";
  return r;
}

MetricResult Robustness(const ProbeLog& log, std::chrono::milliseconds window) {
  if (window.count() <= 0) throw Error(ErrorCode::kConfiguration, "robustness window must be positive");
  if (log.empty()) throw Error(ErrorCode::kEmptyTarget, "no probe outcomes to measure");
  std::int64_t t0 = std::min_element(log.begin(), log.end(),
                                     [](const ProbeOutcome& a, const ProbeOutcome& b) {
                                       return a.timestamp_ms < b.timestamp_ms;
                                     })->timestamp_ms;
  std::map<std::int64_t, std::pair<std::size_t, std::size_t>> windows;
  for (const ProbeOutcome& o : log) {
    auto& [ok, total] = windows[(o.timestamp_ms - t0) / window.count()];
    ok += o.success ? 1 : 0;
    ++total;
  }
  double sum = 0.0;
  for (const auto& [index, counts] : windows) {
    sum += static_cast<double>(counts.first) / static_cast<double>(counts.second);
  }
  MetricResult r = MetricResult::Score(sum / static_cast<double>(windows.size()));
  r.components["windows"] = static_cast<double>(windows.size());
  r.components["window_ms"] = static_cast<double>(window.count());
  r.mode = "mean windowed availability";
  return r;
}

const AccessMethodProperties& DefaultAccessMethodProperties() {
  static const AccessMethodProperties kProperties = [] {
    auto v = [](std::string_view ns, const char* local) { return std::string(ns) + local; };
    AccessMethodProperties m;
    m["data-dump"] = {v(vocab::kVoid, "dataDump"), v(vocab::kDcat, "downloadURL")};
    m["sparql-endpoint"] = {v(vocab::kVoid, "sparqlEndpoint"), v(vocab::kSd, "endpoint")};
    m["dereferenceable-resources"] = {v(vocab::kVoid, "uriLookupEndpoint"),
                                      v(vocab::kVoid, "exampleResource"),
                                      v(vocab::kVoid, "rootResource")};
    m["api"] = {v(vocab::kDcat, "endpointURL"), v(vocab::kDcat, "endpointDescription"),
                v(vocab::kHydra, "entrypoint"), v(vocab::kHydra, "apiDocumentation")};
    return m;
  }();
  return kProperties;
}

MetricResult AccessibilityMethods(const Dataset& dataset,
                                  const AccessMethodProperties& properties) {
  Graph all = dataset.Union();
  std::vector<std::string> members;
  std::vector<std::string> evidence;
  for (const auto& [method, props] : properties) {
    for (const std::string& p : props) {
      TripleRange range = all.WithPredicate(Term::Iri(p));
      if (range.begin() != range.end()) {
        members.push_back(method);
        evidence.push_back(ToNTriples(*range.begin()));
        break;
      }
    }
  }
  MetricResult r = MetricResult::Set(std::move(members), properties.size());
  for (std::string& e : evidence) r.AddEvidence(std::move(e));
  r.mode = "declared metadata";
  return r;
}

MetricResult Connectedness(const Graph& a, const Graph& b) {
  std::set<std::string> external;
  for (const Triple& t : a) {
    if (t.object().is_iri() && !a.HasSubject(t.object())) external.insert(t.object().value());
  }
  std::size_t joined = 0;
  std::vector<std::string> dangling;
  for (const std::string& iri : external) {
    if (b.HasSubject(Term::Iri(iri))) {
      ++joined;
    } else {
      dangling.push_back(iri);
    }
  }
  MetricResult r = MetricResult::Ratio(joined, external.size(), "external object IRIs");
  for (std::string& d : dangling) r.AddEvidence(std::move(d));
  return r;
}

}  // namespace ldq
