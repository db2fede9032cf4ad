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

#include "cqed/sweep.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "cqed/entanglement.hpp"
#include "cqed/langevin.hpp"
#include "cqed/parallel.hpp"

namespace cqed {
namespace {

constexpr double kGHz = kTwoPi * 1e9;

template <typename T>
struct Stage {
  std::optional<T> value;
  ErrorCode error = ErrorCode::kOk;
  std::string message;
  bool done = false;
};

class Pipeline {
 public:
  Pipeline(const CircuitParams& params, const ModelSettings& settings)
      : p_(params), s_(settings) {}

  const Stage<bool>& valid() {
    return run(valid_, [&] {
      const auto report = validate(p_);
      if (!report.ok()) fail(ErrorCode::kDomain, report.summary());
      check_truncation(s_.trunc);
      if (s_.mode_m < 1) fail(ErrorCode::kDomain, "mode_m must be >= 1");
      return true;
    });
  }

  const Stage<SpectrumResult>& spectrum() {
    return run(spectrum_, [&] {
      require(valid());
      const auto cc = coupling_constants_for_modes(s_.trunc.n_tl_modes, p_.x_j, p_);
      return tracked_spectrum(cc, s_.trunc, p_, s_.spectrum);
    });
  }

  const Stage<DetuningSet>& detunings() {
    return run(detunings_, [&] { return detuning_set(require(spectrum())); });
  }

  const Stage<CouplingConstants>& coupling() {
    return run(coupling_, [&] {
      require(valid());
      return coupling_constants(s_.mode_m, p_.x_j, p_, s_.omega_n_variant);
    });
  }

  const Stage<DriveSpec>& drive() {
    return run(drive_, [&] {
      require(valid());
      if (p_.detuning_mode.kind == DetuningMode::Kind::kExplicit) return resolve_drive(p_, nullptr);
      const DetuningSet& d = require(detunings());
      return resolve_drive(p_, &d);
    });
  }

  const Stage<SteadyStateFields>& steady() {
    return run(steady_, [&] {
      const auto ss = strong_field_steady_state(require(coupling()), require(drive()), p_);
      if (!(ss.residual < kResidualTolerance)) {
        std::ostringstream msg;
        msg << "steady-state residual " << ss.residual << " above " << kResidualTolerance;
        fail(ErrorCode::kSolverFailure, msg.str());
      }
      return ss;
    });
  }

  const Stage<EntanglementReport>& entanglement() {
    return run(entanglement_, [&] {
      return entanglement_metric(require(coupling()), require(drive()), require(steady()), p_);
    });
  }

  const CircuitParams& params() const { return p_; }

  template <typename T>
  static const T& require(const Stage<T>& stage) {
    if (stage.error != ErrorCode::kOk) fail(stage.error, stage.message);
    return *stage.value;
  }

 private:
  template <typename T, typename F>
  static const Stage<T>& run(Stage<T>& stage, F&& f) {
    if (stage.done) return stage;
    stage.done = true;
    try {
      stage.value = f();
    } catch (const Error& e) {
      stage.error = e.code();
      stage.message = e.what();
    }
    return stage;
  }

  CircuitParams p_;
  ModelSettings s_;
  Stage<bool> valid_;
  Stage<SpectrumResult> spectrum_;
  Stage<DetuningSet> detunings_;
  Stage<CouplingConstants> coupling_;
  Stage<DriveSpec> drive_;
  Stage<SteadyStateFields> steady_;
  Stage<EntanglementReport> entanglement_;
};

using Extractor = std::function<double(Pipeline&)>;

struct Entry {
  ObservableInfo info;
  Extractor extract;
};

double level(Pipeline& p, int i) {
  const auto& s = Pipeline::require(p.spectrum());
  if (i > static_cast<int>(s.levels.size())) fail(ErrorCode::kDomain, "level not tracked");
  return s.levels[i - 1] / kGHz;
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    for (int i = 1; i <= 4; ++i) {
      e.push_back({{"E_" + std::to_string(i), "GHz"}, [i](Pipeline& p) { return level(p, i); }});
    }
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        if (i == j) continue;
        e.push_back({{"dE_" + std::to_string(i) + std::to_string(j), "GHz"}, [i, j](Pipeline& p) {
                       return Pipeline::require(p.spectrum()).transition(i, j) / kGHz;
                     }});
      }
    }
    e.push_back({{"alpha_r", "1"}, [](Pipeline& p) {
                   const auto& s = Pipeline::require(p.spectrum());
                   if (s.alpha_condition != ErrorCode::kOk) fail(s.alpha_condition, "alpha_r undefined");
                   return s.alpha_r;
                 }});
    e.push_back({{"tau_p", "s"}, [](Pipeline& p) {
                   const auto& s = Pipeline::require(p.spectrum());
                   if (s.tau_condition != ErrorCode::kOk) fail(s.tau_condition, "tau_p undefined");
                   return s.tau_p;
                 }});
    for (auto pair : {TransitionPair::kW21MinusW32, TransitionPair::kW32MinusW43,
                      TransitionPair::kW43MinusW32, TransitionPair::kW31MinusW42}) {
      e.push_back({{transition_pair_name(pair), "GHz"}, [pair](Pipeline& p) {
                     return Pipeline::require(p.detunings()).get(pair) / kGHz;
                   }});
    }
    e.push_back({{"gamma_m", "rad/s"},
                 [](Pipeline& p) { return Pipeline::require(p.coupling()).gamma_m; }});
    e.push_back({{"alpha_m", "1"},
                 [](Pipeline& p) { return Pipeline::require(p.coupling()).alpha_m; }});
    e.push_back({{"kappa_n_prime", "rad/s"}, [](Pipeline& p) {
                   return modified_decay(Pipeline::require(p.coupling()),
                                         Pipeline::require(p.drive()), p.params())
                       .kappa_n_prime;
                 }});
    e.push_back({{"purcell_term", "rad/s"}, [](Pipeline& p) {
                   return modified_decay(Pipeline::require(p.coupling()),
                                         Pipeline::require(p.drive()), p.params())
                       .purcell_term;
                 }});
    e.push_back({{"gamma_n_kerr", "rad/s"},
                 [](Pipeline& p) { return Pipeline::require(p.steady()).gamma_n_kerr; }});
    e.push_back({{"n_tl", "1"},
                 [](Pipeline& p) { return Pipeline::require(p.entanglement()).n_tl; }});
    e.push_back({{"n_t", "1"},
                 [](Pipeline& p) { return Pipeline::require(p.entanglement()).n_t; }});
    e.push_back({{"n_otl", "rad/s"},
                 [](Pipeline& p) { return Pipeline::require(p.entanglement()).n_otl; }});
    e.push_back({{"n_ot", "rad/s"},
                 [](Pipeline& p) { return Pipeline::require(p.entanglement()).n_ot; }});
    e.push_back({{"d_mm_abs", "rad/s"}, [](Pipeline& p) {
                   return std::abs(Pipeline::require(p.entanglement()).d_mm);
                 }});
    e.push_back({{"epsilon_e", "1"},
                 [](Pipeline& p) { return Pipeline::require(p.entanglement()).epsilon_e; }});
    return e;
  }();
  return entries;
}

const Entry* find_entry(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.info.name == name) return &e;
  }
  return nullptr;
}

}  // namespace

void check_axes(const std::vector<SweepAxis>& axes) {
  if (axes.empty() || axes.size() > 3) fail(ErrorCode::kInvalidConfig, "a sweep needs 1 to 3 axes");
  std::set<AxisName> seen;
  for (const auto& a : axes) {
    const std::string name = axis_name(a.name);
    if (!seen.insert(a.name).second) fail(ErrorCode::kInvalidConfig, "duplicate axis " + name);
    if (a.count < 1) fail(ErrorCode::kInvalidConfig, "axis " + name + ": count must be >= 1");
    if (!(std::isfinite(a.start) && std::isfinite(a.stop)) || a.start > a.stop) {
      fail(ErrorCode::kInvalidConfig, "axis " + name + ": need finite start <= stop");
    }
    if (a.name == AxisName::kModeM) {
      for (int i = 0; i < a.count; ++i) {
        const double v = a.value(i);
        if (v != std::round(v) || v < 1.0) {
          fail(ErrorCode::kInvalidConfig, "axis mode_m must take integer values >= 1");
        }
      }
    }
  }
}

std::string axis_name(AxisName name) {
  switch (name) {
    case AxisName::kEjOverEc: return "ej_over_ec";
    case AxisName::kXPosition: return "x_position";
    case AxisName::kCg: return "c_g";
    case AxisName::kModeM: return "mode_m";
    case AxisName::kDriveAmplitude: return "drive_amplitude";
  }
  return "";
}

AxisName parse_axis_name(const std::string& name) {
  for (auto a : {AxisName::kEjOverEc, AxisName::kXPosition, AxisName::kCg, AxisName::kModeM,
                 AxisName::kDriveAmplitude}) {
    if (axis_name(a) == name) return a;
  }
  fail(ErrorCode::kInvalidConfig, "unknown sweep axis '" + name + "'");
}

double SweepAxis::value(int i) const {
  if (count <= 1) return start;
  if (i == count - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / (count - 1);
}

const std::vector<ObservableInfo>& observable_registry() {
  static const std::vector<ObservableInfo> infos = [] {
    std::vector<ObservableInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_registered_observable(const std::string& name) { return find_entry(name) != nullptr; }

std::string observable_unit(const std::string& name) {
  const auto* e = find_entry(name);
  if (!e) fail(ErrorCode::kInvalidConfig, "unknown observable '" + name + "'");
  return e->info.unit;
}

std::vector<PointValue> evaluate_point(const CircuitParams& params, const ModelSettings& settings,
                                       const std::vector<std::string>& observables) {
  std::vector<const Entry*> entries;
  for (const auto& name : observables) {
    const auto* e = find_entry(name);
    if (!e) fail(ErrorCode::kInvalidConfig, "unknown observable '" + name + "'");
    entries.push_back(e);
  }
  Pipeline pipeline(params, settings);
  std::vector<PointValue> out(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    try {
      out[k].value = entries[k]->extract(pipeline);
      if (!std::isfinite(out[k].value)) fail(ErrorCode::kDomain, "non-finite value");
    } catch (const Error& e) {
      out[k].value = 0.0;
      out[k].error = e.code();
      out[k].message = e.what();
    }
  }
  return out;
}

std::size_t SweepGrid::masked_count() const {
  std::size_t n = 0;
  for (auto e : error_mask) n += e != ErrorCode::kOk;
  return n;
}

GridPoint grid_point(const CircuitParams& base, const ModelSettings& settings,
                     const std::vector<SweepAxis>& axes, std::size_t flat) {
  GridPoint gp{base, settings.mode_m};
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a) {
    const auto& axis = axes[a];
    const int i = static_cast<int>(flat % axis.count);
    flat /= axis.count;
    const double v = axis.value(i);
    switch (axis.name) {
      case AxisName::kEjOverEc: gp.params.e_j = v * gp.params.e_c; break;
      case AxisName::kXPosition: gp.params.x_j = v; break;
      case AxisName::kCg: gp.params.c_g = v; break;
      case AxisName::kModeM: gp.mode_m = static_cast<int>(std::lround(v)); break;
      case AxisName::kDriveAmplitude: gp.params.drive_amplitude = v; break;
    }
  }
  return gp;
}

std::vector<SweepGrid> run_sweep(const CircuitParams& base, const ModelSettings& settings,
                                 const std::vector<SweepAxis>& axes,
                                 const std::vector<std::string>& observables, int threads) {
  check_axes(axes);
  if (observables.empty()) fail(ErrorCode::kInvalidConfig, "no observables requested");
  for (const auto& name : observables) observable_unit(name);

  std::size_t points = 1;
  for (const auto& a : axes) points *= static_cast<std::size_t>(a.count);

  std::vector<SweepGrid> grids(observables.size());
  for (std::size_t k = 0; k < observables.size(); ++k) {
    grids[k].axes = axes;
    grids[k].observable = observables[k];
    grids[k].unit = observable_unit(observables[k]);
    grids[k].values.assign(points, 0.0);
    grids[k].error_mask.assign(points, ErrorCode::kOk);
  }
  parallel_for(points, threads, [&](std::size_t flat) {
    const auto gp = grid_point(base, settings, axes, flat);
    ModelSettings local = settings;
    local.mode_m = gp.mode_m;
    const auto values = evaluate_point(gp.params, local, observables);
    for (std::size_t k = 0; k < values.size(); ++k) {
      grids[k].values[flat] = values[k].value;
      grids[k].error_mask[flat] = values[k].error;
    }
  });
  return grids;
}

}  // namespace cqed
