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

#include "cqed/langevin.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include "cqed/errors.hpp"
#include "cqed/parallel.hpp"

namespace cqed {
namespace {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;

struct FieldSystem {
  double km, kn, dm, dn, g, ecm;
};

FieldSystem field_system(const CouplingConstants& cc, const DriveSpec& drive,
                         const CircuitParams& params) {
  return {params.kappa_m, params.kappa_n, drive.delta_m, drive.delta_n, cc.gamma_m, cc.e_cm};
}

// Unknowns x = (Re A, Im A, Re B, Im B).
Vec4 residual(const FieldSystem& s, const Vec4& x, std::complex<double> e) {
  Vec4 f;
  f(0) = -0.5 * s.km * x(0) + s.dm * x(1) - 2.0 * s.g * x(3) + e.real();
  f(1) = -s.dm * x(0) - 0.5 * s.km * x(1) + e.imag();
  f(2) = -0.5 * s.kn * x(2) + s.dn * x(3) - 2.0 * s.g * x(1);
  f(3) = -s.dn * x(2) - 0.5 * s.kn * x(3) + (8.0 / 3.0) * s.ecm * x(2) * x(2) * x(2);
  return f;
}

Mat4 linear_part(const FieldSystem& s) {
  Mat4 j;
  j << -0.5 * s.km, s.dm, 0.0, -2.0 * s.g,
       -s.dm, -0.5 * s.km, 0.0, 0.0,
       0.0, -2.0 * s.g, -0.5 * s.kn, s.dn,
       0.0, 0.0, -s.dn, -0.5 * s.kn;
  return j;
}

Mat4 jacobian(const FieldSystem& s, const Vec4& x) {
  Mat4 j = linear_part(s);
  j(3, 2) += 8.0 * s.ecm * x(2) * x(2);
  return j;
}

struct NewtonOutcome {
  bool converged = false;
  Vec4 x = Vec4::Zero();
  int iterations = 0;
};

NewtonOutcome newton(const FieldSystem& s, Vec4 x, std::complex<double> e) {
  NewtonOutcome out;
  const double scale = std::abs(e);
  Vec4 f = residual(s, x, e);
  double norm = f.cwiseAbs().maxCoeff();
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    out.iterations = it + 1;
    if (norm <= 1e-13 * scale) {
      out.converged = true;
      break;
    }
    const Vec4 dx = jacobian(s, x).partialPivLu().solve(-f);
    double step = 1.0;
    Vec4 trial = x + dx;
    Vec4 f_trial = residual(s, trial, e);
    double n_trial = f_trial.cwiseAbs().maxCoeff();
    for (int halving = 0; halving < 30 && !(n_trial < norm); ++halving) {
      step *= 0.5;
      trial = x + step * dx;
      f_trial = residual(s, trial, e);
      n_trial = f_trial.cwiseAbs().maxCoeff();
    }
    const bool stalled = !(n_trial < norm);
    if (!stalled) {
      x = trial;
      f = f_trial;
      norm = n_trial;
    }
    if (stalled || dx.cwiseAbs().maxCoeff() <= 1e-15 * x.cwiseAbs().maxCoeff()) {
      out.converged = norm <= kResidualTolerance * 1e-2 * scale;
      break;
    }
  }
  out.x = x;
  return out;
}

struct Continuation {
  bool converged = false;
  Vec4 x = Vec4::Zero();
  int iterations = 0;
  double failed_amplitude = 0.0;
};

Continuation continuation(const FieldSystem& s, std::complex<double> e, int steps) {
  Continuation out;
  Vec4 prev = Vec4::Zero();
  for (int k = 1; k <= steps; ++k) {
    const double frac = static_cast<double>(k) / steps;
    const std::complex<double> ek = frac * e;
    Vec4 guess;
    if (k == 1) {
      Vec4 rhs(-ek.real(), -ek.imag(), 0.0, 0.0);
      guess = linear_part(s).partialPivLu().solve(rhs);
    } else {
      guess = prev * (static_cast<double>(k) / (k - 1));
    }
    const auto step = newton(s, guess, ek);
    out.iterations += step.iterations;
    if (!step.converged) {
      out.failed_amplitude = std::abs(ek);
      out.x = step.x;
      return out;
    }
    prev = step.x;
  }
  out.converged = true;
  out.x = prev;
  return out;
}

}  // namespace

DriveSpec resolve_drive(const CircuitParams& params, const DetuningSet* detunings) {
  DriveSpec d;
  d.amplitude = params.drive_amplitude;
  d.phase = params.drive_phase;
  if (params.detuning_mode.kind == DetuningMode::Kind::kExplicit) {
    d.delta_m = params.detuning_mode.delta_m;
    d.delta_n = params.detuning_mode.delta_n;
    return d;
  }
  if (detunings == nullptr) {
    fail(ErrorCode::kContract, "from_transitions detuning requires the spectrum of the point");
  }
  d.delta_m = d.delta_n = detunings->get(params.detuning_mode.pair);
  return d;
}

Eigen::Vector4d steady_state_residual(const CouplingConstants& cc, const DriveSpec& drive,
                                      const CircuitParams& params, std::complex<double> a,
                                      std::complex<double> b) {
  return residual(field_system(cc, drive, params), Vec4(a.real(), a.imag(), b.real(), b.imag()),
                  drive.field());
}

SteadyStateFields strong_field_steady_state(const CouplingConstants& cc, const DriveSpec& drive,
                                            const CircuitParams& params) {
  if (!(params.kappa_m > 0.0 && params.kappa_n > 0.0)) {
    fail(ErrorCode::kDomain, "strong_field_steady_state needs kappa_m, kappa_n > 0");
  }
  if (!(drive.amplitude >= 0.0)) fail(ErrorCode::kDomain, "drive amplitude must be >= 0");
  SteadyStateFields ss;
  if (drive.amplitude == 0.0) return ss;

  const auto sys = field_system(cc, drive, params);
  const auto e = drive.field();
  const auto fine = continuation(sys, e, kContinuationSteps);
  if (!fine.converged) {
    std::ostringstream msg;
    msg << "Newton failed to converge within " << kNewtonMaxIterations
        << " iterations at drive amplitude " << fine.failed_amplitude << " rad/s (A = ("
        << fine.x(0) << ", " << fine.x(1) << "), B = (" << fine.x(2) << ", " << fine.x(3) << "))";
    fail(ErrorCode::kSolverFailure, msg.str());
  }
  const auto coarse = continuation(sys, e, kContinuationStepsCoarse);
  const double size = std::max(fine.x.cwiseAbs().maxCoeff(), 1e-300);
  ss.bistable =
      !coarse.converged || (coarse.x - fine.x).cwiseAbs().maxCoeff() > kBistabilityTolerance * size;

  ss.a_big = {fine.x(0), fine.x(1)};
  ss.b_big = {fine.x(2), fine.x(3)};
  ss.newton_iterations = fine.iterations;
  ss.residual = residual(sys, fine.x, e).cwiseAbs().maxCoeff() / drive.amplitude;
  ss.gamma_n_kerr = kerr_rate(ss, cc, params);
  return ss;
}

double kerr_rate(const SteadyStateFields& ss, const CouplingConstants& cc, const CircuitParams&) {
  const double re_b = ss.b_big.real();
  return cc.e_cm * re_b * re_b / 3.0;
}

ModifiedRates modified_decay(const CouplingConstants& cc, const DriveSpec& drive,
                             const CircuitParams& params) {
  if (!(params.kappa_m > 0.0)) fail(ErrorCode::kDomain, "modified_decay needs kappa_m > 0");
  ModifiedRates r;
  const double km = params.kappa_m;
  r.purcell_term =
      4.0 * km * cc.gamma_m * cc.gamma_m / (4.0 * drive.delta_m * drive.delta_m + km * km);
  r.kappa_n_prime = 0.5 * params.kappa_n + r.purcell_term;
  return r;
}

FluctuationModel fluctuation_model(const CouplingConstants& cc, const DriveSpec& drive,
                                   const SteadyStateFields& ss, const CircuitParams& params) {
  FluctuationModel m;
  m.gamma_m = cc.gamma_m;
  m.gamma_n = ss.gamma_n_kerr;
  m.kappa_m = params.kappa_m;
  m.kappa_n = params.kappa_n;
  m.delta_m = drive.delta_m;
  m.delta_n = drive.delta_n;
  m.n_ina = params.n_ina;
  m.n_inb = params.n_inb;
  return m;
}

Eigen::Matrix4d drift_matrix(const FluctuationModel& m) {
  Mat4 d;
  d << -0.5 * m.kappa_m, m.delta_m, 0.0, -2.0 * m.gamma_m,
       -m.delta_m, -0.5 * m.kappa_m, 0.0, 0.0,
       0.0, -2.0 * m.gamma_m, -0.5 * m.kappa_n, m.delta_n,
       0.0, 0.0, -m.delta_n + 2.0 * m.gamma_n, -0.5 * m.kappa_n;
  return d;
}

bool drift_is_stable(const Eigen::Matrix4d& drift) {
  // Faddeev-LeVerrier: det(sI - M) = s^4 + c1 s^3 + c2 s^2 + c3 s + c4.
  const Mat4 id = Mat4::Identity();
  Mat4 mk = drift;
  const double c1 = -mk.trace();
  mk = drift * (mk + c1 * id);
  const double c2 = -mk.trace() / 2.0;
  mk = drift * (mk + c2 * id);
  const double c3 = -mk.trace() / 3.0;
  mk = drift * (mk + c3 * id);
  const double c4 = -mk.trace() / 4.0;
  return c1 > 0.0 && c3 > 0.0 && c4 > 0.0 && c1 * c2 > c3 &&
         c1 * c2 * c3 > c3 * c3 + c1 * c1 * c4;
}

SdeMoments sde_moment_oracle(const FluctuationModel& model, const SdeSettings& settings) {
  if (settings.n_traj < 100) fail(ErrorCode::kContract, "sde_moment_oracle needs n_traj >= 100");
  if (!(settings.dt > 0.0) || !(settings.t_end > settings.dt)) {
    fail(ErrorCode::kContract, "sde_moment_oracle needs 0 < dt < t_end");
  }
  if (!(settings.burn_in >= 0.0 && settings.burn_in < 1.0)) {
    fail(ErrorCode::kContract, "burn_in must lie in [0, 1)");
  }
  const double rate = std::max({model.kappa_m, model.kappa_n, std::abs(model.delta_m),
                                std::abs(model.delta_n), std::abs(model.gamma_m),
                                std::abs(model.gamma_n)});
  if (!(settings.dt * rate < 0.1)) {
    std::ostringstream msg;
    msg << "sde_moment_oracle step too large: dt * max rate = " << settings.dt * rate
        << " (must be < 0.1)";
    fail(ErrorCode::kContract, msg.str());
  }
  const Mat4 drift = drift_matrix(model);
  if (!drift_is_stable(drift)) {
    fail(ErrorCode::kUnstable, "fluctuation drift has an eigenvalue with positive real part");
  }

  const long steps = std::lround(settings.t_end / settings.dt);
  const long burn = static_cast<long>(std::floor(settings.burn_in * steps));
  const long kept = steps - burn;
  const double dt = settings.dt;
  const double sa = std::sqrt(0.5 * model.kappa_m * (model.n_ina + 1.0) * dt);
  const double sb = std::sqrt(0.5 * model.kappa_n * (model.n_inb + 1.0) * dt);
  Mat4 step = Mat4::Identity() + dt * drift;
  Mat4 noise_factor = Mat4::Zero();
  noise_factor.diagonal() << sa, sa, sb, sb;
  if (settings.scheme == SdeScheme::kExactGaussian) {
    // Van Loan: exp([[-M, D], [0, M^T]] dt) holds exp(M dt) and the covariance.
    Mat4 diffusion = Mat4::Zero();
    diffusion.diagonal() << sa * sa / dt, sa * sa / dt, sb * sb / dt, sb * sb / dt;
    Eigen::Matrix<double, 8, 8> block = Eigen::Matrix<double, 8, 8>::Zero();
    block.topLeftCorner<4, 4>() = -drift * dt;
    block.topRightCorner<4, 4>() = diffusion * dt;
    block.bottomRightCorner<4, 4>() = drift.transpose() * dt;
    const Eigen::Matrix<double, 8, 8> e = block.exp();
    step = e.bottomRightCorner<4, 4>().transpose();
    Mat4 cov = step * e.topRightCorner<4, 4>();
    cov = 0.5 * (cov + cov.transpose());
    Eigen::LLT<Mat4> llt(cov);
    if (llt.info() != Eigen::Success) {
      fail(ErrorCode::kSolverFailure, "transition covariance is not positive definite");
    }
    noise_factor = llt.matrixL();
  }

  struct TrajMeans {
    double na, nb, cr, ci;
  };
  std::vector<TrajMeans> per(settings.n_traj);
  parallel_for(per.size(), settings.threads, [&](std::size_t i) {
    std::mt19937_64 rng(settings.seed + i);
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec4 x = Vec4::Zero();
    double na = 0.0, nb = 0.0, cr = 0.0, ci = 0.0;
    for (long k = 0; k < steps; ++k) {
      Vec4 z;
      z(0) = normal(rng);
      z(1) = normal(rng);
      z(2) = normal(rng);
      z(3) = normal(rng);
      x = step * x + noise_factor * z;
      if (k >= burn) {
        na += x(0) * x(0) + x(1) * x(1);
        nb += x(2) * x(2) + x(3) * x(3);
        cr += x(0) * x(2) - x(1) * x(3);
        ci += x(0) * x(3) + x(1) * x(2);
      }
    }
    per[i] = {na / kept, nb / kept, cr / kept, ci / kept};
  });

  const double n = static_cast<double>(per.size());
  TrajMeans mean{0, 0, 0, 0};
  for (const auto& t : per) {
    mean.na += t.na;
    mean.nb += t.nb;
    mean.cr += t.cr;
    mean.ci += t.ci;
  }
  mean = {mean.na / n, mean.nb / n, mean.cr / n, mean.ci / n};
  double va = 0, vb = 0, vc = 0;
  for (const auto& t : per) {
    va += (t.na - mean.na) * (t.na - mean.na);
    vb += (t.nb - mean.nb) * (t.nb - mean.nb);
    vc += (t.cr - mean.cr) * (t.cr - mean.cr) + (t.ci - mean.ci) * (t.ci - mean.ci);
  }
  SdeMoments out;
  out.n_tl = mean.na - 1.0;
  out.n_t = mean.nb - 1.0;
  out.cross = {mean.cr, mean.ci};
  out.stderr_n_tl = std::sqrt(va / (n - 1.0) / n);
  out.stderr_n_t = std::sqrt(vb / (n - 1.0) / n);
  out.stderr_cross = std::sqrt(vc / (n - 1.0) / n);
  out.steps = steps;
  return out;
}

SdeMoments sde_moment_oracle(const CouplingConstants& cc, const DriveSpec& drive,
                             const CircuitParams& params, const SdeSettings& settings) {
  const auto ss = strong_field_steady_state(cc, drive, params);
  return sde_moment_oracle(fluctuation_model(cc, drive, ss, params), settings);
}

}  // namespace cqed
