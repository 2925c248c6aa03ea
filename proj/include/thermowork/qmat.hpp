// Copyright 2026 The thermowork Authors
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

#pragma once

// Dense complex-matrix kernel. Everything here is templated on the real
// scalar type and accepts any Eigen expression whose coefficients are
// std::complex<Real>.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "thermowork/errors.hpp"

namespace thermowork {

template <typename Real>
using CMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using CVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RVectorT = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;
using RVector = RVectorT<double>;
using Index = Eigen::Index;

namespace tolerance {
/// Entrywise Hermiticity tolerance.
inline constexpr double kHermitian = 1e-10;
/// Eigenvalues at or below kClipRelative * lambda_max are treated as zero.
inline constexpr double kClipRelative = 1e-12;
/// Eigenvalues below -kNegativeEigenvalue mark a matrix as non-PSD.
inline constexpr double kNegativeEigenvalue = 1e-10;
}  // namespace tolerance

/// Which factor of a bipartite split survives a partial trace.
enum class Subsystem { A, B };

/// Split of a composite space as d_A x d_B, A being the slow index.
struct Dims {
  Index a = 1;
  Index b = 1;
  Index total() const { return a * b; }
};

template <typename Real>
struct EigDecomposition {
  RVectorT<Real> eigenvalues;     // ascending
  CMatrixT<Real> eigenvectors;    // orthonormal columns
};

template <typename Real>
struct LogResult {
  CMatrixT<Real> log;      // log on the support, zero off it
  CMatrixT<Real> support;  // orthogonal projector onto the support
  Index rank = 0;
};

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  if (m.rows() != m.cols()) return std::numeric_limits<Real>::infinity();
  if (m.size() == 0) return Real(0);
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Derived::RealScalar tol = tolerance::kHermitian) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw NonSquare(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, const char* what) {
  require_square(m, what);
  const auto defect = hermiticity_defect(m);
  if (!(defect <= tolerance::kHermitian)) {
    throw NonHermitian(std::string(what) + " deviates from its adjoint by " +
                       std::to_string(defect));
  }
}

/// Hermitian eigendecomposition, eigenvalues ascending.
template <typename Derived>
EigDecomposition<typename Derived::RealScalar> eigh(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  require_hermitian(m, "eigh input");
  const CMatrixT<Real> sym = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<CMatrixT<Real>> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues only, ascending. Skips the Hermiticity check; callers own it.
template <typename Derived>
RVectorT<typename Derived::RealScalar> eigvalsh_unchecked(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const CMatrixT<Real> sym = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<CMatrixT<Real>> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Clip threshold for a spectrum whose largest eigenvalue is `lambda_max`.
template <typename Real>
Real support_threshold(Real lambda_max) {
  return Real(tolerance::kClipRelative) * std::max(lambda_max, Real(0));
}

template <typename DerivedA, typename DerivedB>
CMatrixT<typename DerivedA::RealScalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedA::RealScalar;
  CMatrixT<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Derived>
void require_bipartite(const Eigen::MatrixBase<Derived>& m, Dims dims) {
  if (dims.a < 1 || dims.b < 1 || m.rows() != dims.total() || m.cols() != dims.total()) {
    throw DimensionMismatch("expected a square matrix of size " + std::to_string(dims.a) + "*" +
                            std::to_string(dims.b) + ", got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
}

template <typename Derived>
CMatrixT<typename Derived::RealScalar> partial_trace(const Eigen::MatrixBase<Derived>& m,
                                                     Dims dims, Subsystem keep) {
  using Real = typename Derived::RealScalar;
  require_bipartite(m, dims);
  if (keep == Subsystem::B) {
    CMatrixT<Real> out = CMatrixT<Real>::Zero(dims.b, dims.b);
    for (Index i = 0; i < dims.a; ++i) out += m.block(i * dims.b, i * dims.b, dims.b, dims.b);
    return out;
  }
  CMatrixT<Real> out(dims.a, dims.a);
  for (Index i = 0; i < dims.a; ++i) {
    for (Index j = 0; j < dims.a; ++j) {
      out(i, j) = m.block(i * dims.b, j * dims.b, dims.b, dims.b).trace();
    }
  }
  return out;
}

/// Tr_A[(effect (x) 1_B) m]: the unnormalized B operator left by an A effect.
template <typename Derived, typename DerivedE>
CMatrixT<typename Derived::RealScalar> contract_a(const Eigen::MatrixBase<Derived>& m, Dims dims,
                                                  const Eigen::MatrixBase<DerivedE>& effect) {
  using Real = typename Derived::RealScalar;
  require_bipartite(m, dims);
  if (effect.rows() != dims.a || effect.cols() != dims.a) {
    throw DimensionMismatch("effect must act on the A factor");
  }
  CMatrixT<Real> out = CMatrixT<Real>::Zero(dims.b, dims.b);
  for (Index a = 0; a < dims.a; ++a) {
    for (Index ap = 0; ap < dims.a; ++ap) {
      const auto coeff = effect(a, ap);
      if (coeff == std::complex<Real>(0)) continue;
      out += coeff * m.block(ap * dims.b, a * dims.b, dims.b, dims.b);
    }
  }
  return out;
}

/// Applies a real function to the spectrum of a Hermitian matrix.
template <typename Derived, typename Fn>
CMatrixT<typename Derived::RealScalar> hermitian_function(const Eigen::MatrixBase<Derived>& m,
                                                          Fn&& fn) {
  const auto eig = eigh(m);
  auto values = eig.eigenvalues;
  for (Index k = 0; k < values.size(); ++k) values(k) = fn(values(k));
  return eig.eigenvectors * values.asDiagonal() * eig.eigenvectors.adjoint();
}

template <typename Derived>
CMatrixT<typename Derived::RealScalar> exp_hermitian(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  return hermitian_function(m, [](Real x) { return std::exp(x); });
}

/// exp(i t K) for Hermitian K.
template <typename Derived>
CMatrixT<typename Derived::RealScalar> unitary_from_hermitian(const Eigen::MatrixBase<Derived>& k,
                                                              typename Derived::RealScalar t) {
  using Real = typename Derived::RealScalar;
  const auto eig = eigh(k);
  CVectorT<Real> phases(eig.eigenvalues.size());
  for (Index j = 0; j < phases.size(); ++j) {
    phases(j) = std::polar(Real(1), t * eig.eigenvalues(j));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

/// Natural log on the support of a PSD matrix.
template <typename Derived>
LogResult<typename Derived::RealScalar> matrix_log_psd(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  const auto eig = eigh(m);
  const Index n = eig.eigenvalues.size();
  LogResult<Real> out{CMatrixT<Real>::Zero(n, n), CMatrixT<Real>::Zero(n, n), 0};
  if (n == 0) return out;
  if (eig.eigenvalues(0) < -Real(tolerance::kNegativeEigenvalue)) {
    throw NegativeEigenvalue("smallest eigenvalue " + std::to_string(eig.eigenvalues(0)));
  }
  const Real cut = support_threshold(eig.eigenvalues(n - 1));
  for (Index k = 0; k < n; ++k) {
    const Real lambda = eig.eigenvalues(k);
    if (lambda <= cut) continue;
    const auto v = eig.eigenvectors.col(k);
    const CMatrixT<Real> proj = v * v.adjoint();
    out.log += std::log(lambda) * proj;
    out.support += proj;
    ++out.rank;
  }
  return out;
}

/// One-norm of the difference, sum of |eigenvalues|, no factor 1/2.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar trace_distance(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("trace_distance operands differ in shape");
  }
  require_hermitian(a, "trace_distance lhs");
  require_hermitian(b, "trace_distance rhs");
  // Both orientations, so swapping the arguments gives the same bits.
  using Real = typename DerivedA::RealScalar;
  const Real forward = eigvalsh_unchecked(a - b).cwiseAbs().sum();
  const Real backward = eigvalsh_unchecked(b - a).cwiseAbs().sum();
  return (forward + backward) / Real(2);
}

}  // namespace thermowork
