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

#include "cqed/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed {
namespace {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& z) { return std::abs(z); }
inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline double real_of(double x) { return x; }
inline double real_of(const Complex& z) { return z.real(); }

template <typename Scalar>
double off_diagonal_max(const DenseMatrix<Scalar>& a) {
  double best = 0.0;
  const auto n = a.rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) best = std::max(best, magnitude(a(p, q)));
  }
  return best;
}

// Zeroes a(p, q) with G = [[c, s], [-s conj(e), c conj(e)]] where
// a(p, q) = r e, |e| = 1: A <- G^dagger A G, V <- V G.
template <typename Scalar>
void rotate(DenseMatrix<Scalar>& a, DenseMatrix<Scalar>& v, Eigen::Index p, Eigen::Index q) {
  const Scalar apq = a(p, q);
  const double r = magnitude(apq);
  const Scalar e = apq / r;
  const Scalar ec = conj_of(e);
  const double app = real_of(a(p, p));
  const double aqq = real_of(a(q, q));
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const auto n = a.rows();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar akp = a(k, p);
    const Scalar akq = a(k, q);
    a(k, p) = c * akp - s * ec * akq;
    a(k, q) = s * akp + c * ec * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Scalar apk = a(p, k);
    const Scalar aqk = a(q, k);
    a(p, k) = c * apk - s * e * aqk;
    a(q, k) = s * apk + c * e * aqk;
  }
  a(p, q) = Scalar(0);
  a(q, p) = Scalar(0);
  a(p, p) = Scalar(app - t * r);
  a(q, q) = Scalar(aqq + t * r);

  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const Scalar vkp = v(k, p);
    const Scalar vkq = v(k, q);
    v(k, p) = c * vkp - s * ec * vkq;
    v(k, q) = s * vkp + c * ec * vkq;
  }
}

}  // namespace

OperatorMatrix ladder(int cutoff) {
  if (cutoff < 2) {
    fail(ErrorCode::kDomain, "ladder cutoff must be >= 2, got " + std::to_string(cutoff));
  }
  OperatorMatrix a = OperatorMatrix::Zero(cutoff, cutoff);
  for (int i = 1; i < cutoff; ++i) a(i - 1, i) = std::sqrt(static_cast<double>(i));
  return a;
}

OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

OperatorMatrix kron_all(const std::vector<OperatorMatrix>& factors) {
  if (factors.empty()) return OperatorMatrix::Identity(1, 1);
  OperatorMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

double hermiticity_residual(const ComplexMatrix& h) {
  const double scale = max_abs(h);
  if (scale == 0.0) return 0.0;
  return max_abs(h - h.adjoint()) / scale;
}

template <typename Scalar>
JacobiStats jacobi_diagonalize(DenseMatrix<Scalar>& a, DenseMatrix<Scalar>& v, double abs_tol,
                               int max_sweeps) {
  JacobiStats stats;
  const auto n = a.rows();
  const double skip_below = 0.1 * abs_tol;
  while (off_diagonal_max(a) > abs_tol) {
    if (stats.sweeps == max_sweeps) {
      std::ostringstream msg;
      msg << "Jacobi did not converge in " << max_sweeps << " sweeps (off-diagonal "
          << off_diagonal_max(a) << ", tolerance " << abs_tol << ")";
      fail(ErrorCode::kContract, msg.str());
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (magnitude(a(p, q)) > skip_below) {
          rotate(a, v, p, q);
          ++stats.rotations;
        }
      }
    }
    ++stats.sweeps;
  }
  return stats;
}

template <typename Scalar>
EigenSystem<Scalar> eigh(const DenseMatrix<Scalar>& h) {
  if (h.rows() != h.cols()) fail(ErrorCode::kContract, "eigh: matrix is not square");
  const auto n = h.rows();
  const double scale = max_abs(h);
  if (scale > 0.0 && max_abs(h - h.adjoint()) > 1e-12 * scale) {
    fail(ErrorCode::kContract, "eigh: input is not Hermitian");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if constexpr (!std::is_same_v<Scalar, double>) {
      if (std::abs(h(i, i).imag()) > 1e-12 * scale) {
        fail(ErrorCode::kContract, "eigh: diagonal entries must be real");
      }
    }
  }

  DenseMatrix<Scalar> a = (h + h.adjoint()) * 0.5;
  DenseMatrix<Scalar> v = DenseMatrix<Scalar>::Identity(n, n);
  EigenSystem<Scalar> out;
  out.stats = jacobi_diagonalize(a, v, kJacobiRelativeTolerance * scale);

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return real_of(a(i, i)) < real_of(a(j, j));
  });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = real_of(a(order[k], order[k]));
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

EigenSystem<Complex> hermitian_eigs(const ComplexMatrix& h) {
  const double scale = max_abs(h);
  if (max_abs(h.imag()) == 0.0) {
    // Still reject non-symmetric real input through the real path.
    auto real = eigh<double>(h.real());
    EigenSystem<Complex> out;
    out.values = std::move(real.values);
    out.vectors = real.vectors.cast<Complex>();
    out.stats = real.stats;
    return out;
  }
  (void)scale;
  return eigh<Complex>(h);
}

template JacobiStats jacobi_diagonalize<double>(RealMatrix&, RealMatrix&, double, int);
template JacobiStats jacobi_diagonalize<Complex>(ComplexMatrix&, ComplexMatrix&, double, int);
template EigenSystem<double> eigh<double>(const RealMatrix&);
template EigenSystem<Complex> eigh<Complex>(const ComplexMatrix&);

}  // namespace cqed
