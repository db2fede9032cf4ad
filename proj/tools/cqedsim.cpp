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

// cqedsim <command> --config <file> [--set key=value]... [--out <dir>] [--seed N]

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cqed/cqed.h"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

int report_status(int status, const char* context) {
  std::fprintf(stderr, "cqedsim: %s: %s (%s)\n", context, cqed_last_error(), cqed_status_name(status));
  return status == CQED_ERR_INVALID_CONFIG ? kExitConfig : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transmon / transmission-line circuit simulator"};
  app.set_version_flag("--version", std::string(cqed_version()));

  std::string command;
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::optional<std::uint64_t> seed;

  app.add_option("command", command, "spectrum | purcell | entangle | detunings | sweep | validate")
      ->required()
      ->check(CLI::IsMember({"spectrum", "purcell", "entangle", "detunings", "sweep", "validate"}));
  app.add_option("--config,-c", config_path, "JSON run configuration")->required();
  app.add_option("--set,-s", overrides, "override a config entry, e.g. params.c_g=3e-14")
      ->take_all();
  app.add_option("--out,-o", out_dir, "output directory (default: config output_dir)");
  app.add_option("--seed", seed, "random seed for stochastic checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  cqed_config* config = nullptr;
  int status = cqed_config_load(config_path.c_str(), &config);
  if (status != CQED_OK) return report_status(status, "config");
  for (const auto& assignment : overrides) {
    status = cqed_config_set(config, assignment.c_str());
    if (status != CQED_OK) {
      cqed_config_free(config);
      return report_status(status, ("--set " + assignment).c_str());
    }
  }
  if (!out_dir.empty()) cqed_config_set_output_dir(config, out_dir.c_str());
  if (seed) cqed_config_set_seed(config, *seed);

  cqed_result* result = nullptr;
  status = cqed_run_command(config, command.c_str(), 0, &result);
  cqed_config_free(config);
  if (status != CQED_OK) return report_status(status, command.c_str());

  for (std::size_t i = 0; i < cqed_result_file_count(result); ++i) {
    std::printf("%s\n", cqed_result_file(result, i));
  }
  for (std::size_t i = 0; i < cqed_result_warning_count(result); ++i) {
    std::fprintf(stderr, "cqedsim: warning: %s\n", cqed_result_warning(result, i));
  }
  const int code = cqed_result_exit_code(result);
  if (code != 0) std::fprintf(stderr, "cqedsim: error: %s\n", cqed_result_error(result));
  cqed_result_free(result);
  return code;
}
