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

// Standing-wave eigenfunctions of the line and their frequencies.
//
// u_m(x) = N sin(m pi (x + l) / 2l) vanishes at both ends, so odd modes have
// an antinode at the centre and even modes a node. N is fixed by
// int C0 u_m u_n dx = C_sigma delta_mn.

#pragma once

#include "cqed/units.hpp"

namespace cqed {

struct ModeFunction {
  int m = 1;
  double norm_const = 0.0;
  double half_length_l = 0.0;

  double operator()(double x) const;
  double derivative(double x) const;
};

ModeFunction make_mode_function(int m, const CircuitParams& params);

// omega_m = m pi / (2 l sqrt(L0 C0)).
double mode_frequency(int m, const CircuitParams& params);

double mode_envelope(int m, double x, const CircuitParams& params);

// |int C0 u_m u_n dx / C_sigma - delta_mn| by composite Simpson over
// quad_points intervals (rounded up to even).
double orthonormality_check(int m, int n, const CircuitParams& params, int quad_points = 2048);

// |int (1/L0) u_m' u_m' dx / C_sigma - omega_m^2| / omega_m^2.
double stiffness_check(int m, const CircuitParams& params, int quad_points = 2048);

}  // namespace cqed
