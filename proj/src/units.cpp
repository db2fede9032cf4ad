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

#include "cqed/units.hpp"

#include <cmath>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed {

static_assert(dim::audit_passes(), "dimensional audit table has a mismatch");

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kOk: return "ok";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kUltrastrong: return "ultrastrong_normalization_breakdown";
    case ErrorCode::kUnstable: return "unstable";
    case ErrorCode::kNegativeSolution: return "negative_solution";
    case ErrorCode::kSolverFailure: return "solver_failure";
    case ErrorCode::kDegenerateSpectrum: return "degenerate_spectrum";
    case ErrorCode::kHarmonicDegeneracy: return "harmonic_degeneracy";
    case ErrorCode::kDegenerateRegime: return "degenerate_regime";
    case ErrorCode::kResource: return "resource";
    case ErrorCode::kContract: return "contract";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].field << ": " << violations[i].message;
  }
  return out.str();
}

ValidationReport validate(const CircuitParams& p) {
  ValidationReport report;
  auto require_positive = [&](const char* field, double value) {
    if (!(std::isfinite(value) && value > 0.0)) {
      report.violations.push_back({field, std::string(field) + " must be positive"});
    }
  };
  auto require_nonnegative = [&](const char* field, double value) {
    if (!(std::isfinite(value) && value >= 0.0)) {
      report.violations.push_back({field, std::string(field) + " must be non-negative"});
    }
  };

  require_positive("c_g", p.c_g);
  require_positive("c_b", p.c_b);
  require_positive("c_j", p.c_j);
  require_positive("c0", p.c0);
  require_positive("l0", p.l0);
  require_positive("half_length_l", p.half_length_l);
  require_positive("c_in", p.c_in);
  require_positive("e_c", p.e_c);
  require_positive("e_j", p.e_j);
  require_positive("kappa_m", p.kappa_m);
  require_positive("kappa_n", p.kappa_n);
  require_nonnegative("n_ina", p.n_ina);
  require_nonnegative("n_inb", p.n_inb);
  require_nonnegative("drive_amplitude", p.drive_amplitude);

  if (!std::isfinite(p.x_j)) {
    report.violations.push_back({"x_j", "x_j must be finite"});
  } else if (std::isfinite(p.half_length_l) && std::abs(p.x_j) > p.half_length_l) {
    report.violations.push_back({"x_j", "x_j outside line"});
  }
  if (!std::isfinite(p.drive_phase)) {
    report.violations.push_back({"drive_phase", "drive_phase must be finite"});
  }
  if (p.detuning_mode.kind == DetuningMode::Kind::kExplicit &&
      !(std::isfinite(p.detuning_mode.delta_m) && std::isfinite(p.detuning_mode.delta_n))) {
    report.violations.push_back({"detuning_mode", "explicit detunings must be finite"});
  }
  return report;
}

DerivedCapacitances derive_capacitances(const CircuitParams& p) {
  DerivedCapacitances d;
  d.c_big_g = p.c_g + p.c_j + p.c_b;
  d.c_sigma = 2.0 * p.half_length_l * p.c0 + d.c_big_g;
  return d;
}

CircuitParams with_ej_over_ec(CircuitParams params, double ratio) {
  params.e_j = ratio * params.e_c;
  return params;
}

}  // namespace cqed
