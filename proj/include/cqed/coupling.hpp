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

#pragma once

#include <vector>

#include "cqed/units.hpp"

namespace cqed {

// Per-mode constants linking mode m of the line to the transmon at x_j.
struct CouplingConstants {
  int m = 1;
  double omega_m = 0.0;           // rad/s
  double alpha_m = 0.0;           // dimensionless, |alpha_m| < 1
  double beta_m = 0.0;            // rad s^-1 F^-1/2
  double gamma_m = 0.0;           // rad/s
  double e_cm = 0.0;              // rad/s, E_c / (1 - alpha_m^2) in angular units
  double omega_n_transmon = 0.0;  // rad/s
};

enum class TransmonFrequencyVariant { kChargingEnergy, kDressedChargingEnergy };

// alpha_m = C_g u_m(x_j) / sqrt(C_sigma C_G). Throws kUltrastrong if |alpha_m| >= 1.
double alpha(int m, double x_j, const CircuitParams& params);

// beta_m = alpha_m omega_m / ((1 - alpha_m^2) sqrt(C_G)).
double beta(int m, double x_j, const CircuitParams& params);

// gamma_m = (e beta_m / hbar) (E_J / 8 E_c)^(1/4) sqrt(hbar / omega_m).
double gamma_coupling(int m, double x_j, const CircuitParams& params);

// E_cm = E_c / (1 - alpha_m^2), angular.
double dressed_charging_energy(int m, double x_j, const CircuitParams& params);

// sqrt(8 E_J E_c) / hbar; the dressed variant substitutes E_cm for E_c.
double transmon_frequency(const CircuitParams& params, int m, double x_j,
                          TransmonFrequencyVariant variant = TransmonFrequencyVariant::kChargingEnergy);

CouplingConstants coupling_constants(
    int m, double x_j, const CircuitParams& params,
    TransmonFrequencyVariant variant = TransmonFrequencyVariant::kChargingEnergy);

// Modes 1..n_modes at x_j.
std::vector<CouplingConstants> coupling_constants_for_modes(int n_modes, double x_j,
                                                            const CircuitParams& params);

}  // namespace cqed
