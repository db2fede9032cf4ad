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

#include "cqed/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

RealMatrix real_kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

RealMatrix real_ladder(int cutoff) {
  RealMatrix a = RealMatrix::Zero(cutoff, cutoff);
  for (int i = 1; i < cutoff; ++i) a(i - 1, i) = std::sqrt(static_cast<double>(i));
  return a;
}

// Places `op` on slot `slot` of the product space, identities elsewhere.
RealMatrix embed(const RealMatrix& op, int slot, const std::vector<int>& dims) {
  RealMatrix out = RealMatrix::Identity(1, 1);
  for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
    out = real_kron(out, s == slot ? op : RealMatrix::Identity(dims[s], dims[s]));
  }
  return out;
}

std::vector<int> slot_dims(const TruncationSpec& trunc) {
  std::vector<int> dims(trunc.n_tl_modes, trunc.tl_photon_cutoff);
  dims.push_back(trunc.transmon_levels);
  return dims;
}

}  // namespace

long TruncationSpec::dimension() const {
  long d = transmon_levels;
  for (int i = 0; i < n_tl_modes; ++i) {
    d *= tl_photon_cutoff;
    if (d > kMaxHilbertDimension) return d;
  }
  return d;
}

void check_truncation(const TruncationSpec& trunc) {
  if (trunc.n_tl_modes < 1 || trunc.tl_photon_cutoff < 1 || trunc.transmon_levels < 1) {
    fail(ErrorCode::kInvalidConfig, "truncation entries must all be >= 1");
  }
  if (trunc.dimension() > kMaxHilbertDimension) {
    std::ostringstream msg;
    msg << "Hilbert space dimension " << trunc.dimension() << " exceeds " << kMaxHilbertDimension;
    fail(ErrorCode::kResource, msg.str());
  }
}

RealMatrix quartic_operator(int levels) {
  const int padded = levels + 4;
  const RealMatrix a = real_ladder(padded);
  const RealMatrix x = a + a.transpose();
  const RealMatrix x2 = x * x;
  const RealMatrix x4 = x2 * x2;
  return x4.topLeftCorner(levels, levels);
}

RealMatrix transmon_block(double e_cm, double e_j, int levels, const HamiltonianOptions& options) {
  const double plasma = std::sqrt(8.0 * e_cm * e_j);
  RealMatrix h = RealMatrix::Zero(levels, levels);
  for (int n = 0; n < levels; ++n) h(n, n) = plasma * (n + 0.5) - e_j;
  if (!options.include_quartic) return h;
  if (options.quartic == QuarticForm::kFull) {
    h -= (e_cm / 12.0) * quartic_operator(levels);
  } else {
    for (int n = 0; n < levels; ++n) {
      h(n, n) -= (e_cm / 12.0) * (6.0 * n * n + 6.0 * n + 3.0);
    }
  }
  return h;
}

RealMatrix assemble_hamiltonian_real(const std::vector<CouplingConstants>& cc,
                                     const TruncationSpec& trunc, const CircuitParams& params,
                                     const HamiltonianOptions& options) {
  check_truncation(trunc);
  if (static_cast<int>(cc.size()) != trunc.n_tl_modes) {
    fail(ErrorCode::kContract, "one CouplingConstants entry is required per line mode");
  }
  for (const auto& c : cc) {
    if (!(std::abs(c.alpha_m) < 1.0)) {
      fail(ErrorCode::kUltrastrong, "assemble_hamiltonian: |alpha_m| >= 1");
    }
  }

  const auto dims = slot_dims(trunc);
  const int t_slot = trunc.n_tl_modes;
  const long dim = trunc.dimension();
  RealMatrix h = RealMatrix::Zero(dim, dim);

  const RealMatrix a = real_ladder(trunc.tl_photon_cutoff);
  const RealMatrix number_a = a.transpose() * a;
  const RealMatrix quad_a = a - a.transpose();
  const RealMatrix b = real_ladder(trunc.transmon_levels);
  const RealMatrix quad_b_full = embed(b - b.transpose(), t_slot, dims);

  for (int m = 0; m < trunc.n_tl_modes; ++m) {
    const RealMatrix shifted =
        number_a + 0.5 * RealMatrix::Identity(trunc.tl_photon_cutoff, trunc.tl_photon_cutoff);
    h += cc[m].omega_m * embed(shifted, m, dims);
    const double g = options.coupling_scale * cc[m].gamma_m;
    if (g != 0.0) h += g * (embed(quad_a, m, dims) * quad_b_full);
  }

  const double e_cm = cc.front().e_cm;
  const double e_j = energy_to_angular(params.e_j);
  h += embed(transmon_block(e_cm, e_j, trunc.transmon_levels, options), t_slot, dims);
  return h;
}

HamiltonianMatrix assemble_hamiltonian(const std::vector<CouplingConstants>& cc,
                                       const TruncationSpec& trunc, const CircuitParams& params,
                                       const HamiltonianOptions& options) {
  return {assemble_hamiltonian_real(cc, trunc, params, options).cast<Complex>()};
}

long basis_index(const std::vector<int>& occupations, const TruncationSpec& trunc) {
  const auto dims = slot_dims(trunc);
  if (occupations.size() != dims.size()) {
    fail(ErrorCode::kContract, "occupation tuple has the wrong length");
  }
  long index = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (occupations[s] < 0 || occupations[s] >= dims[s]) {
      fail(ErrorCode::kDomain, "occupation outside truncation");
    }
    index = index * dims[s] + occupations[s];
  }
  return index;
}

std::vector<int> basis_occupations(long index, const TruncationSpec& trunc) {
  const auto dims = slot_dims(trunc);
  std::vector<int> occ(dims.size());
  for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
    occ[s] = static_cast<int>(index % dims[s]);
    index /= dims[s];
  }
  return occ;
}

ParityBlocks parity_blocks(const TruncationSpec& trunc) {
  ParityBlocks blocks;
  const long dim = trunc.dimension();
  for (long i = 0; i < dim; ++i) {
    int total = 0;
    for (int n : basis_occupations(i, trunc)) total += n;
    (total % 2 == 0 ? blocks.even : blocks.odd).push_back(i);
  }
  return blocks;
}

InteractionBlocks interaction_blocks(const CouplingConstants& cc, const TruncationSpec& trunc) {
  const RealMatrix a = real_ladder(trunc.tl_photon_cutoff);
  const RealMatrix b = real_ladder(trunc.transmon_levels);
  const RealMatrix ad = a.transpose();
  const RealMatrix bd = b.transpose();
  InteractionBlocks out;
  out.beam_splitter = cc.gamma_m * (-real_kron(a, bd) - real_kron(ad, b));
  out.amplification = cc.gamma_m * (real_kron(a, b) + real_kron(ad, bd));
  return out;
}

InteractionSplit interaction_split(const CouplingConstants& cc, const TruncationSpec& trunc) {
  const auto blocks = interaction_blocks(cc, trunc);
  TruncationSpec single = trunc;
  single.n_tl_modes = 1;
  InteractionSplit out;
  out.bs_norm = max_abs(blocks.beam_splitter);
  out.amp_norm = max_abs(blocks.amplification);
  if (trunc.tl_photon_cutoff >= 2 && trunc.transmon_levels >= 2) {
    out.bs_pairing = matrix_element(blocks.beam_splitter, {1, 0}, {0, 1}, single);
    out.amp_pairing = matrix_element(blocks.amplification, {1, 1}, {0, 0}, single);
  }
  return out;
}

double matrix_element(const RealMatrix& h, const std::vector<int>& bra,
                      const std::vector<int>& ket, const TruncationSpec& trunc) {
  return h(basis_index(bra, trunc), basis_index(ket, trunc));
}

ConvergenceReport convergence_check(const std::vector<CouplingConstants>& cc,
                                    const TruncationSpec& trunc, const CircuitParams& params,
                                    const HamiltonianOptions& options) {
  ConvergenceReport report;
  report.cutoff = trunc.tl_photon_cutoff;
  report.cutoff_refined = trunc.tl_photon_cutoff + 2;
  TruncationSpec refined = trunc;
  refined.tl_photon_cutoff = report.cutoff_refined;

  const auto lowest = [&](const TruncationSpec& t) {
    const auto sys = eigh<double>(assemble_hamiltonian_real(cc, t, params, options));
    const long count = std::min<long>(trunc.transmon_levels + 2, sys.values.size());
    return std::vector<double>(sys.values.data(), sys.values.data() + count);
  };
  report.levels = lowest(trunc);
  report.levels_refined = lowest(refined);
  const std::size_t n = std::min(report.levels.size(), report.levels_refined.size());
  for (std::size_t k = 0; k < n; ++k) {
    const double shift = std::abs(report.levels_refined[k] - report.levels[k]);
    const double ref = std::abs(report.levels[k]);
    const double rel = ref > 0.0 ? shift / ref : shift;
    report.max_relative_shift = std::max(report.max_relative_shift, rel);
  }
  report.flagged = report.max_relative_shift > kConvergenceThreshold;
  return report;
}

std::string hamiltonian_to_json(const HamiltonianMatrix& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < h.entries.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < h.entries.cols(); ++j) {
      row.push_back({h.entries(i, j).real(), h.entries(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc{{"dim", h.dim()}, {"units", "rad/s"}, {"entries", std::move(rows)}};
  return doc.dump();
}

}  // namespace cqed
