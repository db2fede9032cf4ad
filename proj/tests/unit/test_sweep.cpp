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

#include <gtest/gtest.h>

#include <cmath>

#include "cqed/coupling.hpp"
#include "cqed/errors.hpp"
#include "cqed/spectrum.hpp"
#include "cqed/sweep.hpp"

namespace cqed {
namespace {

TEST(Sweep, AxisValuesIncludeEndpoints) {
  SweepAxis a{AxisName::kEjOverEc, 1.0, 80.0, 64};
  EXPECT_EQ(a.value(0), 1.0);
  EXPECT_EQ(a.value(63), 80.0);
  EXPECT_NEAR(a.value(1) - a.value(0), 79.0 / 63.0, 1e-12);
  SweepAxis single{AxisName::kCg, 5.0, 5.0, 1};
  EXPECT_EQ(single.value(0), 5.0);
}

TEST(Sweep, AxisNamesRoundTrip) {
  for (auto n : {AxisName::kEjOverEc, AxisName::kXPosition, AxisName::kCg, AxisName::kModeM,
                 AxisName::kDriveAmplitude}) {
    EXPECT_EQ(parse_axis_name(axis_name(n)), n);
  }
  EXPECT_THROW(parse_axis_name("x"), Error);
}

TEST(Sweep, AxisChecks) {
  EXPECT_THROW(check_axes({}), Error);
  EXPECT_THROW(check_axes({{AxisName::kCg, 1, 2, 2}, {AxisName::kCg, 1, 2, 2}}), Error);
  EXPECT_THROW(check_axes({{AxisName::kCg, 2, 1, 2}}), Error);
  EXPECT_THROW(check_axes({{AxisName::kCg, 1, 2, 0}}), Error);
  EXPECT_THROW(check_axes({{AxisName::kModeM, 1, 2, 3}}), Error);
  EXPECT_NO_THROW(check_axes({{AxisName::kModeM, 1, 2, 2}}));
}

TEST(Sweep, RegistryUnits) {
  const auto& reg = observable_registry();
  EXPECT_EQ(reg.front().name, "E_1");
  EXPECT_EQ(reg.back().name, "epsilon_e");
  EXPECT_TRUE(is_registered_observable("dE_21"));
  EXPECT_TRUE(is_registered_observable("w43_minus_w32"));
  EXPECT_FALSE(is_registered_observable("dE_11"));
  EXPECT_FALSE(is_registered_observable("foo"));
  EXPECT_EQ(observable_unit("E_3"), "GHz");
  EXPECT_EQ(observable_unit("tau_p"), "s");
  EXPECT_EQ(observable_unit("n_otl"), "rad/s");
  EXPECT_EQ(observable_unit("epsilon_e"), "1");
}

TEST(Sweep, PointValuesMatchDirectCalls) {
  CircuitParams p;
  p.x_j = 0.4 * p.half_length_l;
  ModelSettings s;
  auto v = evaluate_point(p, s, {"E_2", "dE_21", "alpha_r", "tau_p", "gamma_m", "w43_minus_w32"});
  auto spec = energy_levels(p, s.trunc, p.x_j, ej_over_ec(p));
  auto cc = coupling_constants(1, p.x_j, p);
  for (const auto& pv : v) EXPECT_EQ(pv.error, ErrorCode::kOk) << pv.message;
  EXPECT_NEAR(v[0].value, spec.levels[1] / (2 * M_PI * 1e9), 1e-12 * std::abs(v[0].value));
  EXPECT_NEAR(v[1].value, spec.transition(2, 1) / (2 * M_PI * 1e9), 1e-9);
  EXPECT_DOUBLE_EQ(v[2].value, spec.alpha_r);
  EXPECT_DOUBLE_EQ(v[3].value, spec.tau_p);
  EXPECT_DOUBLE_EQ(v[4].value, cc.gamma_m);
  EXPECT_NEAR(v[5].value, detuning_set(spec).w43_minus_w32 / (2 * M_PI * 1e9), 1e-9);
}

TEST(Sweep, ErrorsArePerObservable) {
  CircuitParams p;
  p.c_g = 40e-15;
  ModelSettings s;
  auto v = evaluate_point(p, s, {"E_1", "epsilon_e"});
  EXPECT_EQ(v[0].error, ErrorCode::kUltrastrong);
  EXPECT_EQ(v[1].error, ErrorCode::kUltrastrong);
  EXPECT_FALSE(v[0].message.empty());
  EXPECT_THROW(evaluate_point(p, s, {"foo"}), Error);
}

TEST(Sweep, GridPointMapping) {
  CircuitParams p;
  ModelSettings s;
  std::vector<SweepAxis> axes{{AxisName::kEjOverEc, 10, 20, 2}, {AxisName::kCg, 1e-15, 3e-15, 3}};
  auto gp = grid_point(p, s, axes, 5);
  EXPECT_DOUBLE_EQ(gp.params.e_j, 20 * p.e_c);
  EXPECT_DOUBLE_EQ(gp.params.c_g, 3e-15);
  EXPECT_EQ(gp.mode_m, 1);
  std::vector<SweepAxis> modes{{AxisName::kModeM, 1, 2, 2}};
  EXPECT_EQ(grid_point(p, s, modes, 1).mode_m, 2);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  CircuitParams p;
  ModelSettings s;
  std::vector<SweepAxis> axes{{AxisName::kEjOverEc, 1, 80, 5},
                              {AxisName::kXPosition, -p.half_length_l, p.half_length_l, 7}};
  auto a = run_sweep(p, s, axes, {"tau_p", "epsilon_e"}, 1);
  auto b = run_sweep(p, s, axes, {"tau_p", "epsilon_e"}, 4);
  ASSERT_EQ(a.size(), 2u);
  for (int k = 0; k < 2; ++k) {
    EXPECT_EQ(a[k].size(), 35u);
    EXPECT_EQ(a[k].values, b[k].values);
    EXPECT_EQ(a[k].error_mask, b[k].error_mask);
  }
  EXPECT_EQ(a[0].unit, "s");
  EXPECT_EQ(a[1].observable, "epsilon_e");
}

TEST(Sweep, GridMatchesPointEvaluation) {
  CircuitParams p;
  ModelSettings s;
  std::vector<SweepAxis> axes{{AxisName::kXPosition, -p.half_length_l, p.half_length_l, 9}};
  auto g = run_sweep(p, s, axes, {"epsilon_e"}, 2)[0];
  std::size_t masked = 0;
  for (int i = 0; i < 9; ++i) {
    CircuitParams q = p;
    q.x_j = axes[0].value(i);
    auto v = evaluate_point(q, s, {"epsilon_e"})[0];
    EXPECT_EQ(g.error_mask[i], v.error);
    if (v.error == ErrorCode::kOk) {
      EXPECT_EQ(g.values[i], v.value);
    } else {
      ++masked;
    }
  }
  EXPECT_EQ(g.masked_count(), masked);
}

TEST(Sweep, SecondModeSelectable) {
  CircuitParams p;
  p.x_j = 0.3 * p.half_length_l;
  ModelSettings s;
  s.mode_m = 2;
  auto v = evaluate_point(p, s, {"gamma_m", "alpha_m"});
  EXPECT_DOUBLE_EQ(v[0].value, gamma_coupling(2, p.x_j, p));
  EXPECT_DOUBLE_EQ(v[1].value, alpha(2, p.x_j, p));
}

}  // namespace
}  // namespace cqed
