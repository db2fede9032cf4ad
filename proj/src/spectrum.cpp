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

#include "cqed/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cqed/coupling.hpp"
#include "cqed/linalg.hpp"

namespace cqed {
namespace {

// Intermediate ramp steps only steer the labels.
constexpr double kTrackingRelativeTolerance = 1e-7;

RealMatrix sub_block(const RealMatrix& h, const std::vector<long>& idx) {
  const long n = static_cast<long>(idx.size());
  RealMatrix out(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) out(i, j) = h(idx[i], idx[j]);
  }
  return out;
}

struct Label {
  int level;     // bare transmon level n
  long row;      // position of |0..0, n> inside the block
  long column;   // current eigenvector column
};

// Greedy max-overlap reassignment; overlap(i, j) = <old_i|new_j>.
void reassign(std::vector<Label>& labels, const RealMatrix& overlap) {
  struct Candidate {
    double weight;
    std::size_t label;
    long column;
  };
  std::vector<Candidate> candidates;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    for (long j = 0; j < overlap.cols(); ++j) {
      candidates.push_back({std::abs(overlap(labels[k].column, j)), k, j});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });
  std::vector<bool> label_done(labels.size(), false);
  std::vector<bool> column_used(overlap.cols(), false);
  std::vector<long> next(labels.size(), -1);
  for (const auto& c : candidates) {
    if (label_done[c.label] || column_used[c.column]) continue;
    label_done[c.label] = true;
    column_used[c.column] = true;
    next[c.label] = c.column;
  }
  for (std::size_t k = 0; k < labels.size(); ++k) labels[k].column = next[k];
}

// Continuation of one parity block; returns the tracked eigenvalues.
void track_block(const RealMatrix& h0, const RealMatrix& h1, std::vector<Label>& labels,
                 int steps, std::vector<double>& out) {
  if (labels.empty()) return;
  const long n = h0.rows();
  auto start = eigh<double>(h0);
  RealMatrix w = start.vectors;
  for (auto& label : labels) {
    long best = 0;
    for (long j = 1; j < n; ++j) {
      if (std::abs(w(label.row, j)) > std::abs(w(label.row, best))) best = j;
    }
    label.column = best;
  }
  // Distinct bare states never share a column at zero coupling unless
  // degenerate; the greedy pass resolves that case too.
  reassign(labels, RealMatrix::Identity(n, n));

  RealMatrix diag = start.values.asDiagonal();
  for (int s = 1; s <= steps; ++s) {
    const double lambda = static_cast<double>(s) / steps;
    const RealMatrix h = h0 + lambda * h1;
    RealMatrix a = w.transpose() * h * w;
    a = 0.5 * (a + a.transpose()).eval();
    RealMatrix u = RealMatrix::Identity(n, n);
    const double rel = s == steps ? kJacobiRelativeTolerance : kTrackingRelativeTolerance;
    jacobi_diagonalize(a, u, rel * max_abs(h));
    reassign(labels, u);
    w = w * u;
    diag = a;
  }
  for (const auto& label : labels) out[label.level] = diag(label.column, label.column);
}

}  // namespace

double SpectrumResult::transition(int i, int j) const {
  const int k = static_cast<int>(levels.size());
  if (i < 1 || j < 1 || i > k || j > k) {
    fail(ErrorCode::kDomain, "transition label outside tracked levels");
  }
  return levels[i - 1] - levels[j - 1];
}

SpectrumResult spectrum_from_levels(std::vector<double> levels) {
  SpectrumResult r;
  r.levels = std::move(levels);
  if (r.levels.size() < 3) {
    r.alpha_condition = ErrorCode::kDomain;
    r.tau_condition = ErrorCode::kDomain;
    r.alpha_r = std::numeric_limits<double>::quiet_NaN();
    r.tau_p = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const double w21 = r.transition(2, 1);
  const double w32 = r.transition(3, 2);
  if (w21 == 0.0) {
    r.alpha_condition = ErrorCode::kDegenerateSpectrum;
    r.tau_condition = ErrorCode::kDegenerateSpectrum;
    r.alpha_r = std::numeric_limits<double>::quiet_NaN();
    r.tau_p = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  r.alpha_r = (w32 - w21) / w21;
  if (r.alpha_r == 0.0) {
    r.tau_condition = ErrorCode::kHarmonicDegeneracy;
    r.tau_p = std::numeric_limits<double>::infinity();
  } else {
    r.tau_p = 1.0 / std::abs(w21 * r.alpha_r);
  }
  return r;
}

SpectrumResult tracked_spectrum(const std::vector<CouplingConstants>& cc,
                                const TruncationSpec& trunc, const CircuitParams& params,
                                const SpectrumOptions& options) {
  if (options.tracking_steps < 1) fail(ErrorCode::kInvalidConfig, "tracking_steps must be >= 1");
  if (options.tracked_levels < 1) fail(ErrorCode::kInvalidConfig, "tracked_levels must be >= 1");
  const int k = std::min(options.tracked_levels, trunc.transmon_levels);

  HamiltonianOptions hopt;
  hopt.quartic = options.quartic;
  hopt.coupling_scale = 0.0;
  const RealMatrix h0 = assemble_hamiltonian_real(cc, trunc, params, hopt);
  hopt.coupling_scale = 1.0;
  const RealMatrix h1 = assemble_hamiltonian_real(cc, trunc, params, hopt) - h0;

  const auto blocks = parity_blocks(trunc);
  std::vector<double> levels(k, 0.0);
  for (const auto* idx : {&blocks.even, &blocks.odd}) {
    std::vector<Label> labels;
    for (int n = 0; n < k; ++n) {
      std::vector<int> occ(trunc.n_tl_modes, 0);
      occ.push_back(n);
      const long flat = basis_index(occ, trunc);
      const auto it = std::find(idx->begin(), idx->end(), flat);
      if (it != idx->end()) labels.push_back({n, static_cast<long>(it - idx->begin()), 0});
    }
    track_block(sub_block(h0, *idx), sub_block(h1, *idx), labels, options.tracking_steps,
                levels);
  }
  return spectrum_from_levels(std::move(levels));
}

SpectrumResult energy_levels(const CircuitParams& params, const TruncationSpec& trunc, double x_j,
                             double ej_over_ec, const SpectrumOptions& options) {
  if (!(ej_over_ec > 0.0) || !std::isfinite(ej_over_ec)) {
    fail(ErrorCode::kDomain, "ej_over_ec must be positive");
  }
  CircuitParams p = with_ej_over_ec(params, ej_over_ec);
  p.x_j = x_j;
  const auto cc = coupling_constants_for_modes(trunc.n_tl_modes, x_j, p);
  return tracked_spectrum(cc, trunc, p, options);
}

double anharmonicity(const SpectrumResult& spectrum) {
  if (spectrum.levels.size() < 3) fail(ErrorCode::kDomain, "anharmonicity needs >= 3 levels");
  const double w21 = spectrum.transition(2, 1);
  if (w21 == 0.0) fail(ErrorCode::kDegenerateSpectrum, "omega_21 = 0");
  return (spectrum.transition(3, 2) - w21) / w21;
}

PulseDuration min_pulse_duration(const SpectrumResult& spectrum) {
  const double a = anharmonicity(spectrum);
  if (a == 0.0) return {false, 0.0};
  return {true, 1.0 / std::abs(spectrum.transition(2, 1) * a)};
}

double DetuningSet::get(TransitionPair pair) const {
  switch (pair) {
    case TransitionPair::kW21MinusW32: return w21_minus_w32;
    case TransitionPair::kW32MinusW43: return w32_minus_w43;
    case TransitionPair::kW43MinusW32: return w43_minus_w32;
    case TransitionPair::kW31MinusW42: return w31_minus_w42;
  }
  return 0.0;
}

DetuningSet detuning_set(const SpectrumResult& s) {
  if (s.levels.size() < 4) fail(ErrorCode::kDomain, "detuning_set needs >= 4 levels");
  DetuningSet d;
  d.w21_minus_w32 = s.transition(2, 1) - s.transition(3, 2);
  d.w32_minus_w43 = s.transition(3, 2) - s.transition(4, 3);
  d.w43_minus_w32 = s.transition(4, 3) - s.transition(3, 2);
  d.w31_minus_w42 = s.transition(3, 1) - s.transition(4, 2);
  return d;
}

std::string transition_pair_name(TransitionPair pair) {
  switch (pair) {
    case TransitionPair::kW21MinusW32: return "w21_minus_w32";
    case TransitionPair::kW32MinusW43: return "w32_minus_w43";
    case TransitionPair::kW43MinusW32: return "w43_minus_w32";
    case TransitionPair::kW31MinusW42: return "w31_minus_w42";
  }
  return "";
}

TransitionPair parse_transition_pair(const std::string& name) {
  for (auto pair : {TransitionPair::kW21MinusW32, TransitionPair::kW32MinusW43,
                    TransitionPair::kW43MinusW32, TransitionPair::kW31MinusW42}) {
    if (transition_pair_name(pair) == name) return pair;
  }
  fail(ErrorCode::kInvalidConfig, "unknown transition pair '" + name + "'");
}

double diagonal_level_energy(const std::vector<int>& mode_occupations, int n_level,
                    const std::vector<CouplingConstants>& cc, const CircuitParams& params) {
  if (mode_occupations.size() != cc.size() || cc.empty()) {
    fail(ErrorCode::kContract, "diagonal_level_energy: one occupation per mode is required");
  }
  double e = 0.0;
  for (std::size_t m = 0; m < cc.size(); ++m) e += cc[m].omega_m * (mode_occupations[m] + 0.5);
  const double e_cm = cc.front().e_cm;
  const double e_j = energy_to_angular(params.e_j);
  const double n = n_level;
  e += std::sqrt(8.0 * e_cm * e_j) * (n + 0.5);
  e -= (e_cm / 12.0) * (6.0 * n * n + 6.0 * n + 3.0);
  return e - e_j;
}

GapMap energy_gap_map(const CircuitParams& params, const TruncationSpec& trunc,
                      const std::vector<double>& ej_over_ec, const std::vector<double>& x_positions,
                      const std::vector<std::pair<int, int>>& pairs,
                      const SpectrumOptions& options) {
  GapMap map;
  map.ej_over_ec = ej_over_ec;
  map.x_positions = x_positions;
  map.pairs = pairs;
  const std::size_t points = ej_over_ec.size() * x_positions.size();
  map.values.assign(pairs.size(), std::vector<double>(points, 0.0));
  map.errors.assign(points, ErrorCode::kOk);
  for (std::size_t i = 0; i < ej_over_ec.size(); ++i) {
    for (std::size_t j = 0; j < x_positions.size(); ++j) {
      const std::size_t at = i * x_positions.size() + j;
      try {
        const auto s = energy_levels(params, trunc, x_positions[j], ej_over_ec[i], options);
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          map.values[p][at] = s.transition(pairs[p].first, pairs[p].second);
        }
      } catch (const Error& e) {
        map.errors[at] = e.code();
        for (auto& v : map.values) v[at] = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  return map;
}

}  // namespace cqed
