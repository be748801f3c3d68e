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

#ifndef LDQ_METRICS_LIVE_TRANSPORT_H_
#define LDQ_METRICS_LIVE_TRANSPORT_H_

#include <memory>

#include "ldq/metrics/container.h"

namespace ldq {

// HTTP/1.1 GET over the network, following up to 5 redirects. The timeout
// bounds connect, read and write separately; a response arriving after the
// total budget is a failure.
std::unique_ptr<ProbeTransport> MakeLiveTransport();

}  // namespace ldq

#endif  // LDQ_METRICS_LIVE_TRANSPORT_H_
