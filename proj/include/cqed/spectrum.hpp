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

// Dressed transmon levels, transition frequencies, anharmonicity, pulse
// duration and the detuning set.
//
// Level E_n+1 is the eigenstate labelled by the bare state |0..0, n>. With
// tracking_steps = 1 the label goes to the eigenvector of maximal overlap
// with that bare state; with more steps the coupling is ramped from 0 and
// each label follows the eigenvector of maximal overlap step by step.
// Either way the assignment is local to one parameter point.

#pragma once

#include <string>
#include <vector>

#include "cqed/errors.hpp"
#include "cqed/hamiltonian.hpp"
#include "cqed/units.hpp"

namespace cqed {

struct SpectrumOptions {
  QuarticForm quartic = QuarticForm::kDiagonal;
  int tracking_steps = 1;
  int tracked_levels = 4;

  bool operator==(const SpectrumOptions&) const = default;
};

struct SpectrumResult {
  std::vector<double> levels;  // rad/s, E_1..E_k
  double alpha_r = 0.0;
  double tau_p = 0.0;  // s
  ErrorCode alpha_condition = ErrorCode::kOk;  // kDegenerateSpectrum when omega_21 = 0
  ErrorCode tau_condition = ErrorCode::kOk;    // kHarmonicDegeneracy when alpha_r = 0

  // omega_ij = E_i - E_j, 1-based labels.
  double transition(int i, int j) const;
};

// Tracked levels at (x_j, E_J/E_c) with E_c held fixed.
SpectrumResult energy_levels(const CircuitParams& params, const TruncationSpec& trunc, double x_j,
                             double ej_over_ec, const SpectrumOptions& options = {});

// Tracked levels from already-derived coupling constants.
SpectrumResult tracked_spectrum(const std::vector<CouplingConstants>& cc,
                                const TruncationSpec& trunc, const CircuitParams& params,
                                const SpectrumOptions& options = {});

// Builds a result from explicit levels (fills alpha_r, tau_p and conditions).
SpectrumResult spectrum_from_levels(std::vector<double> levels);

// (omega_32 - omega_21) / omega_21. Throws kDegenerateSpectrum if omega_21 = 0.
double anharmonicity(const SpectrumResult& spectrum);

struct PulseDuration {
  bool finite = false;  // false: harmonic degeneracy, no finite duration
  double seconds = 0.0;
};

// 1 / |omega_21 alpha_r|.
PulseDuration min_pulse_duration(const SpectrumResult& spectrum);

struct DetuningSet {
  double w21_minus_w32 = 0.0;
  double w32_minus_w43 = 0.0;
  double w43_minus_w32 = 0.0;
  double w31_minus_w42 = 0.0;

  double get(TransitionPair pair) const;
};

// Requires >= 4 levels (kDomain otherwise).
DetuningSet detuning_set(const SpectrumResult& spectrum);

std::string transition_pair_name(TransitionPair pair);
TransitionPair parse_transition_pair(const std::string& name);  // kInvalidConfig on unknown

// sum_m omega_m (occ_m + 1/2) + sqrt(8 E_cm E_J)(n + 1/2) - (E_cm/12)(6n^2 + 6n + 3) - E_J
double diagonal_level_energy(const std::vector<int>& mode_occupations, int n_level,
                    const std::vector<CouplingConstants>& cc, const CircuitParams& params);

struct GapMap {
  std::vector<double> ej_over_ec;
  std::vector<double> x_positions;
  std::vector<std::pair<int, int>> pairs;
  // values[p][i * x_positions.size() + j] = E_a - E_b in rad/s for pairs[p] = (a, b)
  std::vector<std::vector<double>> values;
  std::vector<ErrorCode> errors;  // per grid point
};

GapMap energy_gap_map(const CircuitParams& params, const TruncationSpec& trunc,
                      const std::vector<double>& ej_over_ec, const std::vector<double>& x_positions,
                      const std::vector<std::pair<int, int>>& pairs,
                      const SpectrumOptions& options = {});

}  // namespace cqed
