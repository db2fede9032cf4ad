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

#include "cqed/entanglement.hpp"

#include <cmath>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed {

PhotonNumbers photon_numbers(const FluctuationModel& m) {
  PhotonNumbers out;
  out.a0 = {0.5 * m.kappa_m, m.delta_m};
  out.b0 = {0.5 * m.kappa_n, m.delta_n};
  const double a2 = std::norm(out.a0);
  const double b2 = std::norm(out.b0);
  out.b1 = 1.0 - m.gamma_n * m.gamma_n / b2;
  if (!(out.b1 > 0.0)) {
    std::ostringstream msg;
    msg << "parametric regime beyond linearized validity: B_1 = " << out.b1;
    fail(ErrorCode::kUnstable, msg.str());
  }
  const double p = m.gamma_m * m.gamma_m / a2;
  const double q = m.gamma_m * m.gamma_m / b2;
  const double ra = m.kappa_m * m.n_ina / a2;
  const double rb = (m.gamma_n * m.gamma_n + m.kappa_n * m.n_inb) / b2;
  // Substituting the first equation into the second.
  const double det = out.b1 - 4.0 * p * q;
  out.n_t = (q * (2.0 * p + 2.0 * ra + 1.0) + rb) / det;
  out.n_tl = p * (2.0 * out.n_t + 1.0) + ra;
  if (!(out.n_t >= 0.0 && out.n_tl >= 0.0)) {
    std::ostringstream msg;
    msg << "photon-number system has a negative solution: n_TL = " << out.n_tl
        << ", n_T = " << out.n_t << " (B_1 - 4 g^4/(|A0|^2 |B0|^2) = " << det << ")";
    fail(ErrorCode::kNegativeSolution, msg.str());
  }
  return out;
}

PhotonNumbers photon_numbers(const CouplingConstants& cc, const DriveSpec& drive,
                             const SteadyStateFields& ss, const CircuitParams& params) {
  return photon_numbers(fluctuation_model(cc, drive, ss, params));
}

OutputPhotons output_photon_numbers(double n_tl, double n_t, const CircuitParams& params) {
  return {2.0 * params.kappa_m * n_tl + params.n_ina, 2.0 * params.kappa_n * n_t + params.n_inb};
}

OutputPhotons output_photon_numbers(double n_tl, double n_t, const FluctuationModel& m) {
  return {2.0 * m.kappa_m * n_tl + m.n_ina, 2.0 * m.kappa_n * n_t + m.n_inb};
}

std::complex<double> cross_correlation(const FluctuationModel& m, double n_t) {
  const std::complex<double> a0{0.5 * m.kappa_m, m.delta_m};
  const std::complex<double> b0{0.5 * m.kappa_n, m.delta_n};
  return -2.0 * std::sqrt(m.kappa_m * m.kappa_n) * m.gamma_m * m.gamma_n * (1.0 + n_t) / (a0 * b0);
}

std::complex<double> cross_correlation(const CouplingConstants& cc, const SteadyStateFields& ss,
                                       double n_t, const DriveSpec& drive,
                                       const CircuitParams& params) {
  return cross_correlation(fluctuation_model(cc, drive, ss, params), n_t);
}

double entanglement_ratio(std::complex<double> d_mm, double n_otl, double n_ot) {
  const double mag = std::abs(d_mm);
  if (mag == 0.0) return 0.0;
  const double denom = std::sqrt(n_otl * n_ot);
  if (!(denom > 0.0)) {
    fail(ErrorCode::kDegenerateRegime, "zero output photon number with nonzero d_mm");
  }
  return mag / denom;
}

EntanglementReport entanglement_metric(const FluctuationModel& m) {
  const auto pn = photon_numbers(m);
  const auto out = output_photon_numbers(pn.n_tl, pn.n_t, m);
  EntanglementReport r;
  r.n_tl = pn.n_tl;
  r.n_t = pn.n_t;
  r.n_otl = out.n_otl;
  r.n_ot = out.n_ot;
  r.a0 = pn.a0;
  r.b0 = pn.b0;
  r.b1 = pn.b1;
  r.d_mm = cross_correlation(m, pn.n_t);
  r.epsilon_e = entanglement_ratio(r.d_mm, r.n_otl, r.n_ot);
  r.entangled = r.epsilon_e > 1.0;
  return r;
}

EntanglementReport entanglement_metric(const CouplingConstants& cc, const DriveSpec& drive,
                                       const SteadyStateFields& ss, const CircuitParams& params) {
  return entanglement_metric(fluctuation_model(cc, drive, ss, params));
}

}  // namespace cqed
