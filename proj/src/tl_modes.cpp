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

#include "cqed/tl_modes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

void require_mode_index(int m) {
  if (m < 1) fail(ErrorCode::kDomain, "mode index must be >= 1, got " + std::to_string(m));
}

template <typename F>
double simpson(F&& f, double a, double b, int intervals) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  }
  return sum * h / 3.0;
}

}  // namespace

double ModeFunction::operator()(double x) const {
  const double k = m * std::numbers::pi / (2.0 * half_length_l);
  return norm_const * std::sin(k * (x + half_length_l));
}

double ModeFunction::derivative(double x) const {
  const double k = m * std::numbers::pi / (2.0 * half_length_l);
  return norm_const * k * std::cos(k * (x + half_length_l));
}

ModeFunction make_mode_function(int m, const CircuitParams& params) {
  require_mode_index(m);
  const auto caps = derive_capacitances(params);
  ModeFunction u;
  u.m = m;
  u.half_length_l = params.half_length_l;
  u.norm_const = std::sqrt(caps.c_sigma / (params.half_length_l * params.c0));
  return u;
}

double mode_frequency(int m, const CircuitParams& params) {
  require_mode_index(m);
  return m * std::numbers::pi /
         (2.0 * params.half_length_l * std::sqrt(params.l0 * params.c0));
}

double mode_envelope(int m, double x, const CircuitParams& params) {
  const auto u = make_mode_function(m, params);
  if (!(std::abs(x) <= params.half_length_l)) {
    fail(ErrorCode::kDomain, "position outside line: |x| > l");
  }
  return u(x);
}

double orthonormality_check(int m, int n, const CircuitParams& params, int quad_points) {
  const auto um = make_mode_function(m, params);
  const auto un = make_mode_function(n, params);
  const double l = params.half_length_l;
  const double c_sigma = derive_capacitances(params).c_sigma;
  const double overlap =
      simpson([&](double x) { return params.c0 * um(x) * un(x); }, -l, l, quad_points);
  return std::abs(overlap / c_sigma - (m == n ? 1.0 : 0.0));
}

double stiffness_check(int m, const CircuitParams& params, int quad_points) {
  const auto um = make_mode_function(m, params);
  const double l = params.half_length_l;
  const double c_sigma = derive_capacitances(params).c_sigma;
  const double integral = simpson(
      [&](double x) { return um.derivative(x) * um.derivative(x) / params.l0; }, -l, l,
      quad_points);
  const double w = mode_frequency(m, params);
  return std::abs(integral / c_sigma - w * w) / (w * w);
}

}  // namespace cqed
