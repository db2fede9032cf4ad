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
#include <random>

#include "cqed/errors.hpp"
#include "cqed/linalg.hpp"
#include "oracles/oracles.hpp"

namespace cqed {
namespace {

ComplexMatrix to_library(const oracle::CxMatrix& h) {
  ComplexMatrix out(h.rows(), h.cols());
  for (long i = 0; i < h.rows(); ++i) {
    for (long j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  }
  return out;
}

TEST(Linalg, LadderOperator) {
  auto a = ladder(4);
  EXPECT_NEAR(std::abs(a(0, 1) - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(a(2, 3) - Complex(std::sqrt(3.0), 0)), 0.0, 1e-15);
  EXPECT_EQ(a(1, 0), Complex(0, 0));
  EXPECT_THROW(ladder(1), Error);
}

TEST(Linalg, KroneckerOrdering) {
  auto a = ladder(2);
  OperatorMatrix id = OperatorMatrix::Identity(3, 3);
  auto k = kron(a, id);
  EXPECT_EQ(k.rows(), 6);
  EXPECT_EQ(k(0, 3), Complex(1, 0));
  EXPECT_EQ(k(1, 4), Complex(1, 0));
  auto all = kron_all({id, a});
  EXPECT_EQ(all(0, 1), Complex(1, 0));
}

TEST(Linalg, TwoByTwoClosedForm) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const double a = u(rng), d = u(rng);
    const Complex b(u(rng), u(rng));
    ComplexMatrix h(2, 2);
    h << a, b, std::conj(b), d;
    auto es = hermitian_eigs(h);
    auto [lo, hi] = oracle::eig2(a, b, d);
    EXPECT_NEAR(es.values(0), lo, 1e-12);
    EXPECT_NEAR(es.values(1), hi, 1e-12);
  }
}

TEST(Linalg, RandomHermitianAgainstInertiaBisection) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto h = oracle::random_hermitian(8, rng);
    auto es = hermitian_eigs(to_library(h));
    auto ref = oracle::bisection_eigenvalues(h);
    for (int k = 0; k < 8; ++k) EXPECT_NEAR(es.values(k), ref[k], 1e-8) << t << "/" << k;
  }
}

TEST(Linalg, TraceAndGershgorinProperties) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto h = to_library(oracle::random_hermitian(8, rng, 5.0));
    auto es = hermitian_eigs(h);
    EXPECT_NEAR(es.values.sum(), h.trace().real(), 1e-10);
    for (long k = 0; k < 8; ++k) {
      bool inside = false;
      for (long i = 0; i < 8; ++i) {
        double r = 0;
        for (long j = 0; j < 8; ++j) {
          if (j != i) r += std::abs(h(i, j));
        }
        if (std::abs(es.values(k) - h(i, i).real()) <= r + 1e-12) inside = true;
      }
      EXPECT_TRUE(inside);
    }
    for (long k = 1; k < 8; ++k) EXPECT_LE(es.values(k - 1), es.values(k));
  }
}

TEST(Linalg, EigenvectorsOrthonormalAndResidualSmall) {
  std::mt19937_64 rng(5);
  auto h = to_library(oracle::random_hermitian(12, rng));
  auto es = hermitian_eigs(h);
  ComplexMatrix gram = es.vectors.adjoint() * es.vectors;
  EXPECT_LT(max_abs(gram - ComplexMatrix::Identity(12, 12)), 1e-12);
  ComplexMatrix resid = h * es.vectors - es.vectors * es.values.cast<Complex>().asDiagonal();
  EXPECT_LT(max_abs(resid), 1e-11);
}

TEST(Linalg, RealPathMatchesComplexPath) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  RealMatrix r(6, 6);
  for (int i = 0; i < 6; ++i) {
    for (int j = i; j < 6; ++j) r(i, j) = r(j, i) = u(rng);
  }
  auto real_es = eigh<double>(r);
  ComplexMatrix c = r.cast<Complex>();
  auto ref = oracle::bisection_eigenvalues(c);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(real_es.values(k), ref[k], 1e-10);
}

TEST(Linalg, NonHermitianIsContractError) {
  ComplexMatrix h(2, 2);
  h << 1, 2, 3, 4;
  EXPECT_GT(hermiticity_residual(h), 0.0);
  try {
    hermitian_eigs(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kContract);
  }
}

TEST(Linalg, DiagonalInputNeedsNoRotations) {
  RealMatrix d = RealMatrix::Zero(4, 4);
  d.diagonal() << 3, 1, 2, 0;
  auto es = eigh<double>(d);
  EXPECT_EQ(es.stats.rotations, 0);
  EXPECT_EQ(es.values(0), 0.0);
  EXPECT_EQ(es.values(3), 3.0);
}

}  // namespace
}  // namespace cqed
