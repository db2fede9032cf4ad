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

// Steady-state photon numbers of the linearized fluctuations, output photon
// numbers, phase-sensitive cross-correlation and the ratio
// epsilon_e = |d_mm| / sqrt(n_oTL n_oT) (entangled iff epsilon_e > 1).

#pragma once

#include <complex>

#include "cqed/coupling.hpp"
#include "cqed/langevin.hpp"
#include "cqed/units.hpp"

namespace cqed {

struct PhotonNumbers {
  double n_tl = 0.0;
  double n_t = 0.0;
  std::complex<double> a0;  // j Delta_m + kappa_m/2
  std::complex<double> b0;  // j Delta_n + kappa_n/2
  double b1 = 1.0;          // 1 - gamma_N^2 / |B_0|^2
};

// Solves
//   n_TL = (gamma^2/|A0|^2)(2 n_T + 1) + kappa_m n_ina/|A0|^2
//   B1 n_T = (gamma^2/|B0|^2)(2 n_TL + 1) + gamma_N^2/|B0|^2 + kappa_n n_inb/|B0|^2
// kUnstable if B1 <= 0, kNegativeSolution if a root is negative.
PhotonNumbers photon_numbers(const FluctuationModel& model);

PhotonNumbers photon_numbers(const CouplingConstants& cc, const DriveSpec& drive,
                             const SteadyStateFields& ss, const CircuitParams& params);

struct OutputPhotons {
  double n_otl = 0.0;
  double n_ot = 0.0;
};

// n_oTL = 2 kappa_m n_TL + n_ina, n_oT = 2 kappa_n n_T + n_inb.
OutputPhotons output_photon_numbers(double n_tl, double n_t, const CircuitParams& params);
OutputPhotons output_photon_numbers(double n_tl, double n_t, const FluctuationModel& model);

// -2 sqrt(kappa_m kappa_n) gamma_m gamma_N (1 + n_T) / (A0 B0).
std::complex<double> cross_correlation(const FluctuationModel& model, double n_t);

std::complex<double> cross_correlation(const CouplingConstants& cc, const SteadyStateFields& ss,
                                       double n_t, const DriveSpec& drive,
                                       const CircuitParams& params);

// |d| / sqrt(n_otl n_ot); 0 when d = 0; kDegenerateRegime for a zero
// denominator with nonzero d.
double entanglement_ratio(std::complex<double> d_mm, double n_otl, double n_ot);

struct EntanglementReport {
  double n_tl = 0.0;
  double n_t = 0.0;
  double n_otl = 0.0;
  double n_ot = 0.0;
  std::complex<double> d_mm;
  double epsilon_e = 0.0;
  bool entangled = false;
  std::complex<double> a0;
  std::complex<double> b0;
  double b1 = 1.0;
};

EntanglementReport entanglement_metric(const FluctuationModel& model);

EntanglementReport entanglement_metric(const CouplingConstants& cc, const DriveSpec& drive,
                                       const SteadyStateFields& ss, const CircuitParams& params);

}  // namespace cqed
