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
#include <complex>
#include <random>

#include <Eigen/LU>

#include "cqed/entanglement.hpp"
#include "cqed/errors.hpp"

namespace cqed {
namespace {

constexpr double kMHz = 2 * M_PI * 1e6;

FluctuationModel model(double g, double gn, double n_ina = 0.0, double n_inb = 0.0) {
  return {g, gn, 10 * kMHz, 1 * kMHz, 8 * kMHz, 8 * kMHz, n_ina, n_inb};
}

// Same pair of equations solved as a 2x2 linear system.
std::pair<double, double> linear_reference(const FluctuationModel& m) {
  const double a2 = m.kappa_m * m.kappa_m / 4 + m.delta_m * m.delta_m;
  const double b2 = m.kappa_n * m.kappa_n / 4 + m.delta_n * m.delta_n;
  const double b1 = 1 - m.gamma_n * m.gamma_n / b2;
  const double g2 = m.gamma_m * m.gamma_m;
  Eigen::Matrix2d k;
  k << 1, -2 * g2 / a2, -2 * g2 / b2, b1;
  Eigen::Vector2d rhs(g2 / a2 + m.kappa_m * m.n_ina / a2,
                      g2 / b2 + m.gamma_n * m.gamma_n / b2 + m.kappa_n * m.n_inb / b2);
  Eigen::Vector2d x = k.fullPivLu().solve(rhs);
  return {x(0), x(1)};
}

TEST(Entanglement, PhotonNumbersSolveTheSystem) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.5);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    auto m = model(u(rng) * kMHz, u(rng) * kMHz, u(rng), u(rng));
    PhotonNumbers pn;
    try {
      pn = photon_numbers(m);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    auto [n_tl, n_t] = linear_reference(m);
    EXPECT_NEAR(pn.n_tl, n_tl, 1e-10 * (1 + n_tl));
    EXPECT_NEAR(pn.n_t, n_t, 1e-10 * (1 + n_t));
    const double a2 = std::norm(pn.a0), b2 = std::norm(pn.b0), g2 = m.gamma_m * m.gamma_m;
    EXPECT_NEAR(pn.n_tl, g2 / a2 * (2 * pn.n_t + 1) + m.kappa_m * m.n_ina / a2,
                1e-12 * (1 + pn.n_tl));
    EXPECT_NEAR(pn.b1 * pn.n_t,
                g2 / b2 * (2 * pn.n_tl + 1) + (m.gamma_n * m.gamma_n + m.kappa_n * m.n_inb) / b2,
                1e-12 * (1 + pn.n_t));
  }
  EXPECT_GT(checked, 50);
}

TEST(Entanglement, DefinitionsOfA0B0B1) {
  auto m = model(1 * kMHz, 2 * kMHz);
  auto pn = photon_numbers(m);
  EXPECT_EQ(pn.a0, std::complex<double>(5 * kMHz, 8 * kMHz));
  EXPECT_EQ(pn.b0, std::complex<double>(0.5 * kMHz, 8 * kMHz));
  EXPECT_NEAR(pn.b1, 1 - 4.0 / (0.25 + 64), 1e-14);
}

TEST(Entanglement, UnstableWhenB1NotPositive) {
  auto m = model(0.1 * kMHz, 9 * kMHz);
  try {
    photon_numbers(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnstable);
  }
}

TEST(Entanglement, NegativeSolutionReported) {
  auto m = model(30 * kMHz, 0.1 * kMHz);
  try {
    photon_numbers(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeSolution);
    EXPECT_NE(std::string(e.what()).find("n_TL"), std::string::npos);
  }
}

TEST(Entanglement, OutputPhotons) {
  CircuitParams p;
  p.n_ina = 0.25;
  auto out = output_photon_numbers(2.0, 3.0, p);
  EXPECT_DOUBLE_EQ(out.n_otl, 4 * p.kappa_m + 0.25);
  EXPECT_DOUBLE_EQ(out.n_ot, 6 * p.kappa_n);
}

TEST(Entanglement, CrossCorrelationFormula) {
  auto m = model(1 * kMHz, 2 * kMHz);
  const std::complex<double> a0(5 * kMHz, 8 * kMHz), b0(0.5 * kMHz, 8 * kMHz);
  const auto expect = -2.0 * std::sqrt(10.0 * kMHz * kMHz) * kMHz * 2 * kMHz * 1.5 / (a0 * b0);
  EXPECT_NEAR(std::abs(cross_correlation(m, 0.5) - expect), 0.0, 1e-12 * std::abs(expect));
  EXPECT_EQ(cross_correlation(model(1 * kMHz, 0.0), 0.5), std::complex<double>(0, 0));
}

TEST(Entanglement, RatioEdgeCases) {
  EXPECT_EQ(entanglement_ratio({0, 0}, 0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(entanglement_ratio({3, 4}, 1.0, 25.0), 1.0);
  try {
    entanglement_ratio({1, 0}, 0.0, 2.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateRegime);
  }
}

TEST(Entanglement, MetricAssemblesParts) {
  auto m = model(1 * kMHz, 2 * kMHz);
  auto r = entanglement_metric(m);
  auto pn = photon_numbers(m);
  EXPECT_EQ(r.n_tl, pn.n_tl);
  EXPECT_EQ(r.n_otl, 2 * m.kappa_m * pn.n_tl);
  EXPECT_EQ(r.d_mm, cross_correlation(m, pn.n_t));
  EXPECT_DOUBLE_EQ(r.epsilon_e, std::abs(r.d_mm) / std::sqrt(r.n_otl * r.n_ot));
  EXPECT_EQ(r.entangled, r.epsilon_e > 1.0);
}

}  // namespace
}  // namespace cqed
