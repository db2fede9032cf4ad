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

// Run configuration (JSON), CSV and SVG emission.
//
// Config keys are snake_case and match the field names; unknown keys are an
// error at every level. Every section is optional and defaults apply.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cqed/sweep.hpp"
#include "cqed/units.hpp"

namespace cqed {

struct SweepSpec {
  std::vector<SweepAxis> axes;
  std::vector<std::string> observables;

  bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
  CircuitParams params;
  ModelSettings model;
  SweepSpec sweep;
  std::string output_dir = "out";
  std::uint64_t seed = 1;

  bool operator==(const RunConfig&) const = default;
};

// 64 x 64 over E_J/E_c in [1, 80] and X in [-l, l].
std::vector<SweepAxis> default_axes(const CircuitParams& params);

// Parses and validates (params, truncation, axes, observables). Throws
// kInvalidConfig with a message naming the offending key.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

std::string serialize_config(const RunConfig& config, int indent = 2);

// Applies `key=value` where key is a dotted path ("params.c_g",
// "model.mode_m"). The value is read as JSON when it parses, else as a string.
std::string apply_override(const std::string& json_text, const std::string& assignment);

// "%.11e" with -0 printed as 0.
std::string format_number(double v);

// Header: axis names, value, error_code. Masked rows have an empty value.
std::string csv_text(const SweepGrid& grid);
void write_csv(const SweepGrid& grid, const std::string& path);

// Two-axis grids only (kUnsupported otherwise). Second axis horizontal,
// first axis vertical (start at the bottom).
std::string svg_heatmap(const SweepGrid& grid);
void write_svg_heatmap(const SweepGrid& grid, const std::string& path);

// The fixed 8-stop gradient, low to high.
const std::vector<std::string>& heatmap_stops();

void write_text_file(const std::string& path, const std::string& text);  // kIo on failure

}  // namespace cqed
