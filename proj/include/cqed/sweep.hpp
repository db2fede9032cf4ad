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

// Grid evaluation of registered observables over circuit-parameter axes.
//
// Each point runs the same pure pipeline: coupling constants, tracked
// spectrum, drive resolution, strong-field steady state, photon numbers and
// epsilon_e. Stages are evaluated lazily and a failure masks only the
// observables that depend on the failing stage.

#pragma once

#include <string>
#include <vector>

#include "cqed/coupling.hpp"
#include "cqed/errors.hpp"
#include "cqed/hamiltonian.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/units.hpp"

namespace cqed {

enum class AxisName { kEjOverEc, kXPosition, kCg, kModeM, kDriveAmplitude };

std::string axis_name(AxisName name);
AxisName parse_axis_name(const std::string& name);  // kInvalidConfig on unknown

struct SweepAxis {
  AxisName name = AxisName::kXPosition;
  double start = 0.0;
  double stop = 0.0;
  int count = 1;  // linear spacing, endpoints included

  double value(int i) const;
  bool operator==(const SweepAxis&) const = default;
};

struct ModelSettings {
  TruncationSpec trunc;
  SpectrumOptions spectrum;
  TransmonFrequencyVariant omega_n_variant = TransmonFrequencyVariant::kChargingEnergy;
  int mode_m = 1;  // line mode driving the Langevin/entanglement stage

  bool operator==(const ModelSettings&) const = default;
};

struct ObservableInfo {
  std::string name;
  std::string unit;
};

// Registered observables in a fixed order.
const std::vector<ObservableInfo>& observable_registry();
bool is_registered_observable(const std::string& name);
std::string observable_unit(const std::string& name);

struct PointValue {
  double value = 0.0;
  ErrorCode error = ErrorCode::kOk;
  std::string message;
};

// All requested observables at one parameter point (params already carry
// the point's x_j, e_j, c_g and drive amplitude).
std::vector<PointValue> evaluate_point(const CircuitParams& params, const ModelSettings& settings,
                                       const std::vector<std::string>& observables);

// Throws kInvalidConfig for 0 or > 3 axes, duplicates, count < 1,
// start > stop or non-integral mode_m values.
void check_axes(const std::vector<SweepAxis>& axes);

struct SweepGrid {
  std::vector<SweepAxis> axes;
  std::string observable;
  std::string unit;
  std::vector<double> values;           // row-major, first axis slowest
  std::vector<ErrorCode> error_mask;    // kOk where the value is valid

  std::size_t size() const { return values.size(); }
  std::size_t masked_count() const;
};

// Throws kInvalidConfig for bad axes (0 or > 3 axes, duplicates, count < 1,
// start > stop, non-integral mode_m) or unknown observables. Per-point
// failures are recorded in error_mask and never abort the grid.
std::vector<SweepGrid> run_sweep(const CircuitParams& base, const ModelSettings& settings,
                                 const std::vector<SweepAxis>& axes,
                                 const std::vector<std::string>& observables, int threads = 0);

// Parameters of grid point `flat` (row-major).
struct GridPoint {
  CircuitParams params;
  int mode_m = 1;
};
GridPoint grid_point(const CircuitParams& base, const ModelSettings& settings,
                     const std::vector<SweepAxis>& axes, std::size_t flat);

}  // namespace cqed
