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

// Strong-field steady state of the driven nonlinear Langevin equations, the
// Kerr-like rate, the Purcell-modified decay and a stochastic oracle for the
// linearized fluctuations.
//
// Field equations at steady state (A: line, B: transmon):
//   0 = -(j Delta_m + kappa_m/2) A + j gamma_m (B - B*) + E_TL
//   0 = -(j Delta_n + kappa_n/2) B + j gamma_m (A - A*) + j (8/3) E_cm Re(B)^3
// with E_cm in rad/s.

#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "cqed/coupling.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/units.hpp"

namespace cqed {

struct DriveSpec {
  double amplitude = 0.0;  // rad/s
  double phase = 0.0;      // rad
  double delta_m = 0.0;    // rad/s
  double delta_n = 0.0;    // rad/s

  std::complex<double> field() const { return std::polar(amplitude, phase); }
};

// Explicit detunings are copied; from_transitions needs the detuning set of
// the same parameter point (kContract if absent).
DriveSpec resolve_drive(const CircuitParams& params, const DetuningSet* detunings);

struct SteadyStateFields {
  std::complex<double> a_big;
  std::complex<double> b_big;
  double gamma_n_kerr = 0.0;  // rad/s
  double residual = 0.0;      // max |F| / |E_TL|
  bool bistable = false;
  int newton_iterations = 0;
};

inline constexpr int kNewtonMaxIterations = 100;
inline constexpr int kContinuationSteps = 16;
inline constexpr int kContinuationStepsCoarse = 8;
inline constexpr double kBistabilityTolerance = 1e-6;
inline constexpr double kResidualTolerance = 1e-10;

// Amplitude continuation from zero drive; throws kSolverFailure when Newton
// stalls. The coarse and fine continuations are compared for bistability.
SteadyStateFields strong_field_steady_state(const CouplingConstants& cc, const DriveSpec& drive,
                                            const CircuitParams& params);

// Residual vector (Re F_A, Im F_A, Re F_B, Im F_B) of the field equations.
Eigen::Vector4d steady_state_residual(const CouplingConstants& cc, const DriveSpec& drive,
                                      const CircuitParams& params, std::complex<double> a,
                                      std::complex<double> b);

// E_cm Re(B)^2 / 3.
double kerr_rate(const SteadyStateFields& ss, const CouplingConstants& cc, const CircuitParams& params);

struct ModifiedRates {
  double kappa_n_prime = 0.0;
  double purcell_term = 0.0;
};

// purcell = 4 kappa_m gamma_m^2 / (4 Delta_m^2 + kappa_m^2); kappa_n' = kappa_n/2 + purcell.
ModifiedRates modified_decay(const CouplingConstants& cc, const DriveSpec& drive,
                             const CircuitParams& params);

// Coefficients of the linearized fluctuation equations.
struct FluctuationModel {
  double gamma_m = 0.0;
  double gamma_n = 0.0;  // Kerr-like rate
  double kappa_m = 0.0;
  double kappa_n = 0.0;
  double delta_m = 0.0;
  double delta_n = 0.0;
  double n_ina = 0.0;
  double n_inb = 0.0;
};

FluctuationModel fluctuation_model(const CouplingConstants& cc, const DriveSpec& drive,
                                   const SteadyStateFields& ss, const CircuitParams& params);

// Drift of x = (Re da, Im da, Re db, Im db): dx/dt = M x + noise.
Eigen::Matrix4d drift_matrix(const FluctuationModel& model);

// Routh-Hurwitz test on det(sI - M).
bool drift_is_stable(const Eigen::Matrix4d& drift);

enum class SdeScheme {
  kEulerMaruyama,  // x' = (I + M dt) x + w, E[w w^T] = D dt
  kExactGaussian,  // x' = exp(M dt) x + w with the exact transition covariance
};

struct SdeSettings {
  SdeScheme scheme = SdeScheme::kEulerMaruyama;
  std::uint64_t seed = 1;
  int n_traj = 10000;
  double t_end = 0.0;     // s
  double dt = 0.0;        // s
  double burn_in = 0.5;   // fraction of t_end discarded before averaging
  int threads = 0;        // <= 0: default_thread_count()
};

struct SdeMoments {
  double n_tl = 0.0;
  double n_t = 0.0;
  std::complex<double> cross;  // <da db>
  double stderr_n_tl = 0.0;
  double stderr_n_t = 0.0;
  double stderr_cross = 0.0;   // of |cross| via per-trajectory components
  long steps = 0;
};

// Complex white noise with E|dxi|^2 = kappa (n_in + 1) dt. Euler-Maruyama
// inflates stationary variances by roughly 1/(1 - (Delta^2/kappa) dt); the
// exact scheme has no step-size bias.
// Estimators: n = <|x|^2> - 1 and cross = <x_a x_b>, averaged over time after
// burn-in and over trajectories. Trajectory i draws from mt19937_64(seed + i).
SdeMoments sde_moment_oracle(const FluctuationModel& model, const SdeSettings& settings);

SdeMoments sde_moment_oracle(const CouplingConstants& cc, const DriveSpec& drive,
                             const CircuitParams& params, const SdeSettings& settings);

}  // namespace cqed
