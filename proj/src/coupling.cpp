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

#include "cqed/coupling.hpp"

#include <cmath>
#include <sstream>

#include "cqed/errors.hpp"
#include "cqed/tl_modes.hpp"

namespace cqed {
namespace {

double checked_alpha(int m, double x_j, const CircuitParams& params) {
  const auto caps = derive_capacitances(params);
  const double u = mode_envelope(m, x_j, params);
  const double a = params.c_g * u / std::sqrt(caps.c_sigma * caps.c_big_g);
  if (!(std::abs(a) < 1.0)) {
    std::ostringstream msg;
    msg << "ultra-strong normalization breakdown: |alpha_" << m << "| = " << std::abs(a)
        << " >= 1 at x_j = " << x_j;
    fail(ErrorCode::kUltrastrong, msg.str());
  }
  return a;
}

}  // namespace

double alpha(int m, double x_j, const CircuitParams& params) {
  return checked_alpha(m, x_j, params);
}

double beta(int m, double x_j, const CircuitParams& params) {
  const double a = checked_alpha(m, x_j, params);
  const double c_big_g = derive_capacitances(params).c_big_g;
  return a * mode_frequency(m, params) / ((1.0 - a * a) * std::sqrt(c_big_g));
}

double gamma_coupling(int m, double x_j, const CircuitParams& params) {
  const double b = beta(m, x_j, params);
  const double w = mode_frequency(m, params);
  // E_J/E_c is a ratio, so the Hz values can be used directly.
  const double ratio = params.e_j / (8.0 * params.e_c);
  return (kElementaryCharge * b / kHbar) * std::pow(ratio, 0.25) * std::sqrt(kHbar / w);
}

double dressed_charging_energy(int m, double x_j, const CircuitParams& params) {
  const double a = checked_alpha(m, x_j, params);
  return energy_to_angular(params.e_c) / (1.0 - a * a);
}

double transmon_frequency(const CircuitParams& params, int m, double x_j,
                          TransmonFrequencyVariant variant) {
  const double ej = energy_to_angular(params.e_j);
  const double ec = variant == TransmonFrequencyVariant::kChargingEnergy
                        ? energy_to_angular(params.e_c)
                        : dressed_charging_energy(m, x_j, params);
  return std::sqrt(8.0 * ej * ec);
}

CouplingConstants coupling_constants(int m, double x_j, const CircuitParams& params,
                                     TransmonFrequencyVariant variant) {
  CouplingConstants cc;
  cc.m = m;
  cc.omega_m = mode_frequency(m, params);
  cc.alpha_m = checked_alpha(m, x_j, params);
  cc.beta_m = beta(m, x_j, params);
  cc.gamma_m = gamma_coupling(m, x_j, params);
  cc.e_cm = dressed_charging_energy(m, x_j, params);
  cc.omega_n_transmon = transmon_frequency(params, m, x_j, variant);
  return cc;
}

std::vector<CouplingConstants> coupling_constants_for_modes(int n_modes, double x_j,
                                                            const CircuitParams& params) {
  std::vector<CouplingConstants> out;
  out.reserve(n_modes);
  for (int m = 1; m <= n_modes; ++m) out.push_back(coupling_constants(m, x_j, params));
  return out;
}

}  // namespace cqed
