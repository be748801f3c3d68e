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

#include "ldq/metrics/live_transport.h"

#include <chrono>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#define CPPHTTPLIB_REDIRECT_MAX_COUNT 5
#include "httplib.h"

namespace ldq {
namespace {

// scheme://authority and the path-and-query of an absolute IRI.
struct SplitUrl {
  std::string origin;
  std::string path;
};

std::optional<SplitUrl> Split(const std::string& url) {
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return std::nullopt;
  std::size_t path_start = url.find('/', scheme_end + 3);
  SplitUrl out;
  out.origin = url.substr(0, path_start);
  out.path = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (std::size_t hash = out.path.find('#'); hash != std::string::npos) out.path.resize(hash);
  return out;
}

class LiveTransport : public ProbeTransport {
 public:
  ProbeOutcome Fetch(const std::string& url, std::string_view accept,
                     std::chrono::milliseconds timeout) override {
    ProbeOutcome o;
    o.target = url;
    auto wall = std::chrono::system_clock::now().time_since_epoch();
    o.timestamp_ms = std::chrono::duration_cast<std::chrono::milliseconds>(wall).count();
    auto parts = Split(url);
    if (!parts) return o;

    httplib::Client client(parts->origin);
    auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout);
    auto micros = std::chrono::duration_cast<std::chrono::microseconds>(timeout - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());
    client.set_follow_location(true);

    auto start = std::chrono::steady_clock::now();
    httplib::Headers headers = {{"Accept", std::string(accept)}};
    auto response = client.Get(parts->path, headers);
    auto elapsed = std::chrono::steady_clock::now() - start;
    o.latency_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    if (!response) return o;
    o.status_class = response->status / 100;
    if (response->has_header("Content-Type")) {
      o.media_type = response->get_header_value("Content-Type");
    }
    o.success = *o.status_class == 2 && o.latency_ms <= static_cast<double>(timeout.count());
    return o;
  }
};

}  // namespace

std::unique_ptr<ProbeTransport> MakeLiveTransport() { return std::make_unique<LiveTransport>(); }

}  // namespace ldq
