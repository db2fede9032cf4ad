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

// Physical inputs of a run and their unit conventions.
//
// Energies cross the boundary as ordinary frequencies E/h in Hz (that is how
// circuit tables quote E_c and E_J) and are converted once to angular units
// (rad/s). Every rate and detuning is already angular. The elementary charge
// and hbar only appear inside the coupling-rate formula.

#pragma once

#include <numbers>
#include <string>
#include <vector>

namespace cqed {

inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double energy_to_angular(double freq_hz) { return kTwoPi * freq_hz; }
constexpr double angular_to_energy(double omega) { return omega / kTwoPi; }

// Which dressed-transition difference supplies Delta_m = Delta_n.
enum class TransitionPair {
  kW21MinusW32,
  kW32MinusW43,
  kW43MinusW32,
  kW31MinusW42,
};

struct DetuningMode {
  enum class Kind { kExplicit, kFromTransitions };

  Kind kind = Kind::kFromTransitions;
  double delta_m = 0.0;  // rad/s, explicit only
  double delta_n = 0.0;  // rad/s, explicit only
  TransitionPair pair = TransitionPair::kW43MinusW32;

  bool operator==(const DetuningMode&) const = default;
};

// Defaults are the published circuit table plus representative decay rates,
// bath occupations and drive.
struct CircuitParams {
  double c_g = 20e-15;            // F
  double c_b = 40e-15;            // F
  double c_j = 2e-15;             // F
  double c0 = 0.66e-12;           // F/m
  double l0 = 623e-9;             // H/m
  double half_length_l = 12.7e-3; // m, line spans [-l, +l]
  double c_in = 2e-15;            // F
  double e_c = 660e6;             // Hz (E_c / h)
  double e_j = 4.5e9;             // Hz (E_J / h)
  double x_j = 0.0;               // m
  double kappa_m = kTwoPi * 10e6; // rad/s
  double kappa_n = kTwoPi * 1e6;  // rad/s
  double n_ina = 0.0;
  double n_inb = 0.0;
  double drive_amplitude = kTwoPi * 100e6;  // rad/s
  double drive_phase = 0.0;                 // rad
  DetuningMode detuning_mode;

  bool operator==(const CircuitParams&) const = default;
};

struct DerivedCapacitances {
  double c_big_g = 0.0;  // C_g + C_J + C_B
  double c_sigma = 0.0;  // 2 l C_0 + C_G
};

struct Violation {
  std::string field;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate(const CircuitParams& params);

DerivedCapacitances derive_capacitances(const CircuitParams& params);

// Ratio E_J/E_c with E_c held fixed: sweeps scale E_J only.
CircuitParams with_ej_over_ec(CircuitParams params, double ratio);

inline double ej_over_ec(const CircuitParams& params) {
  return params.e_j / params.e_c;
}

// Compile-time dimensional bookkeeping for the derived quantities. Exponents
// are stored doubled so that square roots of capacitances stay integral.
namespace dim {

struct Dimension {
  int mass2 = 0;
  int length2 = 0;
  int time2 = 0;
  int current2 = 0;

  constexpr bool operator==(const Dimension&) const = default;
};

constexpr Dimension operator*(Dimension a, Dimension b) {
  return {a.mass2 + b.mass2, a.length2 + b.length2, a.time2 + b.time2,
          a.current2 + b.current2};
}
constexpr Dimension operator/(Dimension a, Dimension b) {
  return {a.mass2 - b.mass2, a.length2 - b.length2, a.time2 - b.time2,
          a.current2 - b.current2};
}
constexpr Dimension sqrt(Dimension a) {
  return {a.mass2 / 2, a.length2 / 2, a.time2 / 2, a.current2 / 2};
}
constexpr bool has_integral_root(Dimension a) {
  return a.mass2 % 2 == 0 && a.length2 % 2 == 0 && a.time2 % 2 == 0 &&
         a.current2 % 2 == 0;
}

inline constexpr Dimension kDimensionless{};
inline constexpr Dimension kMeter{0, 2, 0, 0};
inline constexpr Dimension kSecond{0, 0, 2, 0};
inline constexpr Dimension kKilogram{2, 0, 0, 0};
inline constexpr Dimension kAmpere{0, 0, 0, 2};
inline constexpr Dimension kRate = kDimensionless / kSecond;  // rad/s
inline constexpr Dimension kCoulomb = kAmpere * kSecond;
inline constexpr Dimension kJoule = kKilogram * kMeter * kMeter / (kSecond * kSecond);
inline constexpr Dimension kVolt = kJoule / kCoulomb;
inline constexpr Dimension kFarad = kCoulomb / kVolt;
inline constexpr Dimension kHenry = kVolt * kSecond / kAmpere;
inline constexpr Dimension kActionHbar = kJoule * kSecond;

struct AuditEntry {
  const char* quantity;
  Dimension computed;
  Dimension expected;
};

// One row per derived quantity used downstream.
inline constexpr AuditEntry kAuditTable[] = {
    {"c_sigma = 2 l C0 + C_G", kMeter * (kFarad / kMeter), kFarad},
    {"u_m = sqrt(C_sigma / (l C0))", sqrt(kFarad / (kMeter * (kFarad / kMeter))),
     kDimensionless},
    {"omega_m = m pi / (2 l sqrt(L0 C0))",
     kDimensionless / (kMeter * sqrt((kHenry / kMeter) * (kFarad / kMeter))), kRate},
    {"alpha_m = C_g u_m / sqrt(C_sigma C_G)", kFarad / sqrt(kFarad * kFarad),
     kDimensionless},
    {"beta_m = alpha_m omega_m / ((1 - alpha_m^2) sqrt(C_G))", kRate / sqrt(kFarad),
     kRate / sqrt(kFarad)},
    {"gamma_m = (e beta_m / hbar)(E_J/8E_c)^(1/4) sqrt(hbar / omega_m)",
     kCoulomb * (kRate / sqrt(kFarad)) / kActionHbar * sqrt(kActionHbar / kRate), kRate},
    {"E_cm / hbar", kJoule / kActionHbar, kRate},
    {"omega_n = sqrt(8 E_J E_c) / hbar", sqrt(kJoule * kJoule) / kActionHbar, kRate},
    {"gamma_N = E_cm Re(B)^2 / (3 hbar)", kJoule / kActionHbar, kRate},
    {"kappa_n' = kappa_n/2 + 4 kappa_m gamma_m^2 / (4 Delta_m^2 + kappa_m^2)",
     kRate * kRate * kRate / (kRate * kRate), kRate},
    {"d_mm = 2 sqrt(kappa_m kappa_n) <da db>", sqrt(kRate * kRate), kRate},
    {"n_oTL = 2 kappa_m n_TL", kRate, kRate},
    {"epsilon_e = |d_mm| / sqrt(n_oTL n_oT)", kRate / sqrt(kRate * kRate), kDimensionless},
    {"tau_p = 1 / |omega_21 alpha_r|", kDimensionless / kRate, kSecond},
};

constexpr bool audit_passes() {
  for (const auto& entry : kAuditTable) {
    if (!(entry.computed == entry.expected)) return false;
  }
  return true;
}

}  // namespace dim

}  // namespace cqed
