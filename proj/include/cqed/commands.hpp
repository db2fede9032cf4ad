// Copyright 2026 The cqedsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Front-end commands shared by the C API and the command-line tool.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqed/io.hpp"

namespace cqed {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitConfig = 2,
  kExitRegime = 3,
};

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;     // written, in order
  std::vector<std::string> warnings;
  std::string error;                  // set when exit_code != 0
};

// Command names: spectrum, purcell, entangle, detunings, sweep, validate.
const std::vector<std::string>& command_names();

// Observables emitted by a map command (the sweep command uses the config's list).
std::vector<std::string> command_observables(const std::string& command, const RunConfig& config);

// Runs a command and writes its artifacts into config.output_dir. Never
// throws for compute or IO problems; they are reported through the result.
// threads <= 0 uses default_thread_count().
CommandResult run_command(const std::string& command, const RunConfig& config, int threads = 0);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Fast invariant and oracle checks at fixed reference points.
std::vector<CheckOutcome> run_validation_suite(std::uint64_t seed);

}  // namespace cqed
