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

// Dense operators on truncated Fock spaces and the Hermitian eigensolver.
//
// Storage and products are Eigen row-major matrices. Diagonalization is a
// cyclic Jacobi sweep with complex (phase + real) plane rotations; the real
// instantiation is used whenever a Hermitian input has no imaginary part.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace cqed {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Complex = std::complex<double>;
using ComplexMatrix = DenseMatrix<Complex>;
using RealMatrix = DenseMatrix<double>;
using OperatorMatrix = ComplexMatrix;

// Annihilation operator: a(i-1, i) = sqrt(i) for i = 1..cutoff-1.
OperatorMatrix ladder(int cutoff);

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b);

// factors[0] (x) factors[1] (x) ... ; the last factor varies fastest.
OperatorMatrix kron_all(const std::vector<OperatorMatrix>& factors);

// Largest |entry|.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// max |H - H^dagger| / max |H| (0 for the zero matrix).
double hermiticity_residual(const ComplexMatrix& h);

struct JacobiStats {
  int sweeps = 0;
  long rotations = 0;
};

// Rotates `a` towards diagonal form in place and right-multiplies every
// rotation into `v`. Stops once every off-diagonal magnitude is <= abs_tol.
// Throws kContract when max_sweeps is exhausted.
template <typename Scalar>
JacobiStats jacobi_diagonalize(DenseMatrix<Scalar>& a, DenseMatrix<Scalar>& v, double abs_tol,
                               int max_sweeps = 64);

template <typename Scalar>
struct EigenSystem {
  Eigen::VectorXd values;        // ascending
  DenseMatrix<Scalar> vectors;   // orthonormal columns
  JacobiStats stats;
};

inline constexpr double kJacobiRelativeTolerance = 1e-12;

// Full diagonalization of a Hermitian (or real symmetric) matrix; eigenvalues
// ascending. Throws kContract for non-Hermitian input.
template <typename Scalar>
EigenSystem<Scalar> eigh(const DenseMatrix<Scalar>& h);

// Complex entry point; dispatches to the real path when Im(H) == 0.
EigenSystem<Complex> hermitian_eigs(const ComplexMatrix& h);

}  // namespace cqed
