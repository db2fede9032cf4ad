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

// Truncated product-space Hamiltonian of the line modes and the transmon.
//
// Basis ordering: |n_1, ..., n_M, n_b> with mode 1 slowest and the transmon
// level fastest. All entries are angular frequencies (rad/s).

#pragma once

#include <string>
#include <vector>

#include "cqed/coupling.hpp"
#include "cqed/linalg.hpp"
#include "cqed/units.hpp"

namespace cqed {

inline constexpr long kMaxHilbertDimension = 4096;

struct TruncationSpec {
  int n_tl_modes = 2;
  int tl_photon_cutoff = 4;
  int transmon_levels = 4;

  long dimension() const;
  bool operator==(const TruncationSpec&) const = default;
};

// Throws kInvalidConfig for entries < 1 and kResource above kMaxHilbertDimension.
void check_truncation(const TruncationSpec& trunc);

enum class QuarticForm {
  kDiagonal,  // number-conserving part 6n^2 + 6n + 3
  kFull,      // (b + b^dagger)^4 built in a padded space, then truncated
};

struct HamiltonianOptions {
  QuarticForm quartic = QuarticForm::kDiagonal;
  double coupling_scale = 1.0;  // multiplies every gamma_m
  bool include_quartic = true;
};

struct HamiltonianMatrix {
  ComplexMatrix entries;

  long dim() const { return entries.rows(); }
};

// Real symmetric form; the Hamiltonian has no imaginary entries.
RealMatrix assemble_hamiltonian_real(const std::vector<CouplingConstants>& cc,
                                     const TruncationSpec& trunc, const CircuitParams& params,
                                     const HamiltonianOptions& options = {});

HamiltonianMatrix assemble_hamiltonian(const std::vector<CouplingConstants>& cc,
                                       const TruncationSpec& trunc, const CircuitParams& params,
                                       const HamiltonianOptions& options = {});

// Transmon-only block: sqrt(8 E_cm E_J)(n + 1/2) - (E_cm/12) Q - E_J.
RealMatrix transmon_block(double e_cm, double e_j, int levels, const HamiltonianOptions& options);

// Matrix representation of (b + b^dagger)^4 on `levels` states, exact in
// every retained entry.
RealMatrix quartic_operator(int levels);

// Flat index of an occupation tuple (modes first, transmon last).
long basis_index(const std::vector<int>& occupations, const TruncationSpec& trunc);
std::vector<int> basis_occupations(long index, const TruncationSpec& trunc);

// Indices of even and odd total excitation number; H never connects them.
struct ParityBlocks {
  std::vector<long> even;
  std::vector<long> odd;
};
ParityBlocks parity_blocks(const TruncationSpec& trunc);

struct InteractionSplit {
  double bs_norm = 0.0;   // max |element| of gamma(-a b^dagger - a^dagger b)
  double amp_norm = 0.0;  // max |element| of gamma(a b + a^dagger b^dagger)
  double bs_pairing = 0.0;   // <1_TL, 0_T| H_bs |0_TL, 1_T>
  double amp_pairing = 0.0;  // <1_TL, 1_T| H_amp |0_TL, 0_T>
};

// Splits gamma_m (a - a^dagger)(b - b^dagger) on the single-mode space
// (tl_photon_cutoff x transmon_levels) into its two interaction classes.
InteractionSplit interaction_split(const CouplingConstants& cc, const TruncationSpec& trunc);

struct InteractionBlocks {
  RealMatrix beam_splitter;
  RealMatrix amplification;
};
InteractionBlocks interaction_blocks(const CouplingConstants& cc, const TruncationSpec& trunc);

double matrix_element(const RealMatrix& h, const std::vector<int>& bra,
                      const std::vector<int>& ket, const TruncationSpec& trunc);

struct ConvergenceReport {
  int cutoff = 0;
  int cutoff_refined = 0;
  std::vector<double> levels;          // lowest transmon_levels + 2, rad/s
  std::vector<double> levels_refined;  // same count at cutoff + 2
  double max_relative_shift = 0.0;
  bool flagged = false;
};

inline constexpr double kConvergenceThreshold = 1e-6;

ConvergenceReport convergence_check(const std::vector<CouplingConstants>& cc,
                                    const TruncationSpec& trunc, const CircuitParams& params,
                                    const HamiltonianOptions& options = {});

// Row-major JSON matrix of [re, im] pairs.
std::string hamiltonian_to_json(const HamiltonianMatrix& h);

}  // namespace cqed
