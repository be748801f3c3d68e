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

#ifndef LDQ_APP_COMMANDS_H_
#define LDQ_APP_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ldq/app/assess.h"
#include "ldq/error.h"

namespace ldq {

enum class ExitCode {
  kOk = 0,
  kBelowThreshold = 1,
  // Unrecoverable parse, format, configuration or category error.
  kInvalid = 2,
  kIo = 3,
};

// kIo maps to 3, every other code to 2.
ExitCode ExitCodeFor(ErrorCode code);

// The Cmd functions throw Error; RunCli maps it through ExitCodeFor.

// Writes the report to `out`. Exit 1 only when a threshold is set and the
// content branch score is below it or absent.
ExitCode CmdAssess(const AssessmentConfig& config, std::ostream& out);

ExitCode CmdTaxonomy(const std::optional<std::string>& root, std::optional<int> depth,
                     std::ostream& out);

ExitCode CmdExplain(const std::string& id, std::ostream& out);

struct ProbeCommand {
  ProbeSettings settings;
  // Explicit targets; when empty, sampled from the inputs' http subjects.
  std::vector<std::string> targets;
  std::vector<InputSpec> inputs;
  std::string log_path;
};

// Appends this run's outcomes to the log and prints availability and latency
// over the whole log.
ExitCode CmdProbe(const ProbeCommand& command, std::ostream& out);

// Full command line: `ldq assess|taxonomy|explain|probe ...`. Errors go to
// `err` as one line naming the file and position where known.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ldq

#endif  // LDQ_APP_COMMANDS_H_
