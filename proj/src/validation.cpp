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

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "cqed/commands.hpp"
#include "cqed/coupling.hpp"
#include "cqed/entanglement.hpp"
#include "cqed/hamiltonian.hpp"
#include "cqed/langevin.hpp"
#include "cqed/linalg.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/sweep.hpp"
#include "cqed/tl_modes.hpp"

namespace cqed {
namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckOutcome check(const std::string& name, const std::function<CheckOutcome()>& body) {
  try {
    auto out = body();
    out.name = name;
    return out;
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckOutcome> run_validation_suite(std::uint64_t seed) {
  const CircuitParams table;
  std::vector<CheckOutcome> out;

  out.push_back(check("dimensional_audit", [] {
    return CheckOutcome{"", dim::audit_passes(), "compile-time table"};
  }));

  out.push_back(check("mode_orthonormality", [&] {
    double worst = 0.0;
    for (int m = 1; m <= 8; ++m) {
      for (int n = 1; n <= 8; ++n) worst = std::max(worst, orthonormality_check(m, n, table));
    }
    return CheckOutcome{"", worst < 1e-10, "max residual " + sci(worst)};
  }));

  out.push_back(check("mode_stiffness", [&] {
    double worst = 0.0;
    for (int m = 1; m <= 8; ++m) worst = std::max(worst, stiffness_check(m, table));
    return CheckOutcome{"", worst < 1e-8, "max relative error " + sci(worst)};
  }));

  out.push_back(check("eigensolver_2x2", [] {
    const double g = 0.7, delta = 1.3;
    RealMatrix h(2, 2);
    h << 0.0, g, g, delta;
    const auto sys = eigh<double>(h);
    const double r = std::sqrt(delta * delta / 4 + g * g);
    const double err =
        std::max(std::abs(sys.values(0) - (delta / 2 - r)), std::abs(sys.values(1) - (delta / 2 + r)));
    return CheckOutcome{"", err < 1e-12, "max error " + sci(err)};
  }));

  out.push_back(check("hamiltonian_hermitian", [&] {
    const TruncationSpec trunc;
    const auto cc = coupling_constants_for_modes(trunc.n_tl_modes, 0.0, table);
    const auto h = assemble_hamiltonian(cc, trunc, table);
    const double r = hermiticity_residual(h.entries);
    return CheckOutcome{"", r < 1e-12, "residual " + sci(r)};
  }));

  out.push_back(check("decoupled_spectrum", [&] {
    TruncationSpec trunc;
    auto cc = coupling_constants_for_modes(trunc.n_tl_modes, 0.0, table);
    for (auto& c : cc) c.gamma_m = 0.0;
    const auto s = tracked_spectrum(cc, trunc, table);
    double worst = 0.0;
    for (int n = 0; n < trunc.transmon_levels - 2; ++n) {
      const double ref = diagonal_level_energy({0, 0}, n, cc, table);
      worst = std::max(worst, std::abs(s.levels[n] - ref) / std::abs(ref));
    }
    return CheckOutcome{"", worst < 1e-8, "max relative error " + sci(worst)};
  }));

  out.push_back(check("purcell_resonant_limit", [&] {
    const auto cc = coupling_constants(1, 0.5 * table.half_length_l, table);
    DriveSpec d;
    const auto r = modified_decay(cc, d, table);
    const double ref = table.kappa_n / 2 + 4 * cc.gamma_m * cc.gamma_m / table.kappa_m;
    const double err = std::abs(r.kappa_n_prime - ref) / ref;
    return CheckOutcome{"", err < 1e-12, "relative error " + sci(err)};
  }));

  out.push_back(check("photon_number_resubstitution", [] {
    FluctuationModel m;
    m.gamma_m = kTwoPi * 0.3e6;
    m.gamma_n = kTwoPi * 0.2e6;
    m.kappa_m = kTwoPi * 4e6;
    m.kappa_n = kTwoPi * 2e6;
    m.delta_m = kTwoPi * 3e6;
    m.delta_n = kTwoPi * 3e6;
    m.n_ina = 0.1;
    m.n_inb = 0.2;
    const auto pn = photon_numbers(m);
    const double a2 = std::norm(pn.a0), b2 = std::norm(pn.b0), g2 = m.gamma_m * m.gamma_m;
    const double r1 = pn.n_tl - (g2 / a2 * (2 * pn.n_t + 1) + m.kappa_m * m.n_ina / a2);
    const double r2 = pn.b1 * pn.n_t -
                      (g2 / b2 * (2 * pn.n_tl + 1) + m.gamma_n * m.gamma_n / b2 + m.kappa_n * m.n_inb / b2);
    const double err = std::max(std::abs(r1) / pn.n_tl, std::abs(r2) / (pn.b1 * pn.n_t));
    return CheckOutcome{"", err < 1e-12, "relative residual " + sci(err)};
  }));

  out.push_back(check("steady_state_residual", [&] {
    CircuitParams p = table;
    p.x_j = 0.75 * p.half_length_l;
    ModelSettings s;
    const auto v = evaluate_point(p, s, {"gamma_n_kerr"});
    if (v[0].error != ErrorCode::kOk) return CheckOutcome{"", false, v[0].message};
    const auto spec = energy_levels(p, s.trunc, p.x_j, ej_over_ec(p));
    const auto ds = detuning_set(spec);
    const auto drive = resolve_drive(p, &ds);
    const auto cc = coupling_constants(1, p.x_j, p);
    const auto ss = strong_field_steady_state(cc, drive, p);
    return CheckOutcome{"", ss.residual < kResidualTolerance, "residual " + sci(ss.residual)};
  }));

  out.push_back(check("drive_sign_flip", [&] {
    CircuitParams p = table;
    p.x_j = 0.75 * p.half_length_l;
    p.detuning_mode.kind = DetuningMode::Kind::kExplicit;
    p.detuning_mode.delta_m = p.detuning_mode.delta_n = kTwoPi * 50e6;
    ModelSettings s;
    const auto a = evaluate_point(p, s, {"epsilon_e", "n_otl", "d_mm_abs"});
    p.drive_phase += std::numbers::pi;
    const auto b = evaluate_point(p, s, {"epsilon_e", "n_otl", "d_mm_abs"});
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].error != b[k].error) return CheckOutcome{"", false, "error masks differ"};
      if (a[k].error == ErrorCode::kOk && a[k].value != 0.0) {
        worst = std::max(worst, std::abs(a[k].value - b[k].value) / std::abs(a[k].value));
      }
    }
    return CheckOutcome{"", worst < 1e-9, "max relative change " + sci(worst)};
  }));

  out.push_back(check("sde_thermal_line", [&] {
    FluctuationModel m;
    m.kappa_m = 1.0;
    m.kappa_n = 1.0;
    m.n_ina = 2.0;
    SdeSettings st;
    st.seed = seed;
    st.n_traj = 400;
    st.dt = 0.01;
    st.t_end = 40.0;
    st.threads = 1;
    const auto r = sde_moment_oracle(m, st);
    // Euler-Maruyama inflates the stationary variance by 1/(1 - kappa dt / 4).
    const double expected = (m.n_ina + 1.0) / (1.0 - m.kappa_m * st.dt / 4.0) - 1.0;
    const double dev = std::abs(r.n_tl - expected);
    return CheckOutcome{"", dev < 4.0 * r.stderr_n_tl + 1e-3,
                        "n_TL " + sci(r.n_tl) + " vs " + sci(expected) + " (stderr " +
                            sci(r.stderr_n_tl) + ")"};
  }));

  out.push_back(check("sweep_thread_independence", [&] {
    RunConfig c;
    const double l = c.params.half_length_l;
    const std::vector<SweepAxis> axes{{AxisName::kEjOverEc, 5.0, 60.0, 3},
                                      {AxisName::kXPosition, -l, l, 5}};
    const auto a = run_sweep(c.params, c.model, axes, {"epsilon_e", "tau_p"}, 1);
    const auto b = run_sweep(c.params, c.model, axes, {"epsilon_e", "tau_p"}, 4);
    bool same = true;
    for (std::size_t k = 0; k < a.size(); ++k) same = same && csv_text(a[k]) == csv_text(b[k]);
    return CheckOutcome{"", same, same ? "identical CSV" : "CSV differs"};
  }));

  return out;
}

}  // namespace cqed
