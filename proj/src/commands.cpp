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

#include "cqed/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <limits>
#include <map>

#include <json.hpp>

#include "cqed/errors.hpp"
#include "cqed/sweep.hpp"

namespace cqed {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidConfig: return kExitConfig;
    case ErrorCode::kIo:
    case ErrorCode::kContract:
    case ErrorCode::kResource: return kExitFailure;
    default: return kExitRegime;
  }
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) fail(ErrorCode::kIo, "cannot create output directory '" + dir + "'");
}

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

ordered_json grid_summary(const SweepGrid& g) {
  std::map<std::string, std::size_t> codes;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.error_mask[i] == ErrorCode::kOk) {
      lo = std::min(lo, g.values[i]);
      hi = std::max(hi, g.values[i]);
    } else {
      ++codes[std::string(error_name(g.error_mask[i]))];
    }
  }
  ordered_json j{{"observable", g.observable},
                 {"unit", g.unit},
                 {"points", g.size()},
                 {"masked", g.masked_count()}};
  j["masked_by_code"] = codes;
  if (lo <= hi) {
    j["min"] = lo;
    j["max"] = hi;
  }
  return j;
}

CommandResult run_map(const std::string& command, const RunConfig& config, int threads) {
  CommandResult result;
  const auto observables = command_observables(command, config);
  const auto axes = config.sweep.axes.empty() ? default_axes(config.params) : config.sweep.axes;
  const auto grids = run_sweep(config.params, config.model, axes, observables, threads);

  ensure_dir(config.output_dir);
  const auto config_path = join(config.output_dir, "config.json");
  write_text_file(config_path, serialize_config(config));
  result.files.push_back(config_path);

  ordered_json summary{{"command", command}, {"grids", ordered_json::array()}};
  bool fully_masked = false;
  for (const auto& g : grids) {
    const auto csv = join(config.output_dir, g.observable + ".csv");
    write_csv(g, csv);
    result.files.push_back(csv);
    if (g.axes.size() == 2) {
      const auto svg = join(config.output_dir, g.observable + ".svg");
      write_svg_heatmap(g, svg);
      result.files.push_back(svg);
    } else {
      result.warnings.push_back(g.observable + ": SVG skipped (heatmaps need two axes)");
    }
    if (g.masked_count() > 0) {
      result.warnings.push_back(g.observable + ": " + std::to_string(g.masked_count()) + " of " +
                                std::to_string(g.size()) + " points masked");
    }
    if (g.masked_count() == g.size()) {
      fully_masked = true;
      const auto first = std::find_if(g.error_mask.begin(), g.error_mask.end(),
                                      [](ErrorCode c) { return c != ErrorCode::kOk; });
      result.error = g.observable + ": no point could be evaluated (first error: " +
                     std::string(error_name(*first)) + ")";
    }
    summary["grids"].push_back(grid_summary(g));
  }
  const auto summary_path = join(config.output_dir, "summary.json");
  write_text_file(summary_path, summary.dump(2) + "\n");
  result.files.push_back(summary_path);
  if (fully_masked && command != "sweep") result.exit_code = kExitRegime;
  return result;
}

CommandResult run_validate(const RunConfig& config) {
  CommandResult result;
  const auto checks = run_validation_suite(config.seed);
  ensure_dir(config.output_dir);
  ordered_json doc{{"seed", config.seed}, {"checks", ordered_json::array()}};
  bool all = true;
  for (const auto& c : checks) {
    doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) {
      all = false;
      result.warnings.push_back("check failed: " + c.name + " (" + c.detail + ")");
    }
  }
  doc["passed"] = all;
  const auto path = join(config.output_dir, "validate.json");
  write_text_file(path, doc.dump(2) + "\n");
  result.files.push_back(path);
  if (!all) {
    result.exit_code = kExitFailure;
    result.error = "validation suite reported failures";
  }
  return result;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"spectrum",  "purcell", "entangle",
                                              "detunings", "sweep",   "validate"};
  return names;
}

std::vector<std::string> command_observables(const std::string& command, const RunConfig& config) {
  if (command == "spectrum") return {"E_1", "E_2", "E_3", "E_4", "alpha_r", "tau_p"};
  if (command == "purcell") return {"gamma_m", "kappa_n_prime"};
  if (command == "entangle") return {"n_otl", "n_ot", "d_mm_abs", "epsilon_e"};
  if (command == "detunings") return {"w21_minus_w32", "w32_minus_w43", "w43_minus_w32", "w31_minus_w42"};
  if (command == "sweep") {
    if (config.sweep.observables.empty()) {
      fail(ErrorCode::kInvalidConfig, "sweep needs sweep.observables");
    }
    return config.sweep.observables;
  }
  if (command == "validate") return {};
  fail(ErrorCode::kInvalidConfig, "unknown command '" + command + "'");
}

CommandResult run_command(const std::string& command, const RunConfig& config, int threads) {
  try {
    if (command == "validate") return run_validate(config);
    return run_map(command, config, threads);
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = exit_code_for(e.code());
    r.error = e.what();
    return r;
  } catch (const std::exception& e) {
    CommandResult r;
    r.exit_code = kExitFailure;
    r.error = e.what();
    return r;
  }
}

}  // namespace cqed
