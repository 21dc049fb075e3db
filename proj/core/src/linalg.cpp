// Copyright 2026 The qgtsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgtsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "qgtsim/errors.hpp"

namespace qgtsim {
namespace {

// Largest exponent for which std::exp stays finite, with a safety margin.
constexpr double kMaxExponent = 700.0;
constexpr double kHermitianTol = 1e-10;

double entry_scale(const ComplexMatrix& a) { return std::max(1.0, max_abs(a)); }

std::string shape_of(const ComplexMatrix& a) {
  std::ostringstream os;
  os << a.rows() << "x" << a.cols();
  return os.str();
}

void require_hermitian(const ComplexMatrix& a, const char* op) {
  if (!is_square(a)) {
    throw LinalgError(std::string(op) + ": expected a square matrix, got " + shape_of(a));
  }
  if (!is_hermitian(a, kHermitianTol)) {
    std::ostringstream os;
    os << op << ": matrix is not Hermitian (max |A - A^dagger| = "
       << max_abs(a - a.adjoint()) << ")";
    throw LinalgError(os.str());
  }
}

EigenDecomposition eigensolve_2x2(const ComplexMatrix& a) {
  const double p = a(0, 0).real();
  const double s = a(1, 1).real();
  // Average the two off-diagonal entries so a Hermitian-within-tolerance
  // input is treated as exactly Hermitian.
  const Complex b = 0.5 * (a(0, 1) + std::conj(a(1, 0)));
  const double mean = 0.5 * (p + s);
  const double half = 0.5 * (p - s);
  const double radius = std::hypot(half, std::abs(b));

  EigenDecomposition out;
  out.values.resize(2);
  out.vectors = ComplexMatrix::Identity(2, 2);
  out.values << mean - radius, mean + radius;
  if (radius == 0.0) {
    return out;
  }

  // For each eigenvalue pick the row of (A - lambda I) whose null vector is
  // better conditioned.
  auto null_vector = [&](double lambda) {
    Statevector v(2);
    if (std::abs(lambda - p) >= std::abs(lambda - s)) {
      v << b, Complex(lambda - p, 0.0);
    } else {
      v << Complex(lambda - s, 0.0), std::conj(b);
    }
    v.normalize();
    return v;
  };
  for (int i = 0; i < 2; ++i) {
    Statevector v = null_vector(out.values(i));
    fix_phase_gauge(v);
    out.vectors.col(i) = v;
  }
  return out;
}

}  // namespace

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols() && a.rows() > 0; }

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a) || !a.allFinite()) return false;
  return max_abs(a - a.adjoint()) <= tol * entry_scale(a);
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (!is_square(a) || !a.allFinite()) return false;
  const auto n = a.rows();
  return max_abs(a.adjoint() * a - ComplexMatrix::Identity(n, n)) <= tol;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -tol * entry_scale(a);
}

bool is_upper_triangular(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(a(i, j)) > tol) return false;
    }
  }
  return true;
}

bool is_projector(const ComplexMatrix& a, double tol) {
  return is_hermitian(a, tol) && max_abs(a * a - a) <= tol;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const ComplexMatrix diff = a - b;
  const ComplexMatrix herm = 0.5 * (diff + diff.adjoint());
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

void fix_phase_gauge(Eigen::Ref<Statevector> v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Strictly larger by more than rounding noise, so ties go to the first index.
    if (std::abs(v(i)) > best_abs + 1e-12) {
      best_abs = std::abs(v(i));
      best = i;
    }
  }
  if (best_abs <= 0.0) return;
  v *= std::conj(v(best)) / std::abs(v(best));
  v(best) = Complex(std::abs(v(best)), 0.0);
}

EigenDecomposition hermitian_eigensolve(const ComplexMatrix& a) {
  require_hermitian(a, "hermitian_eigensolve");
  if (a.rows() == 2) return eigensolve_2x2(a);

  const ComplexMatrix herm = 0.5 * (a + a.adjoint());
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw LinalgError("hermitian_eigensolve: eigen-solver did not converge");
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index i = 0; i < out.vectors.cols(); ++i) {
    fix_phase_gauge(out.vectors.col(i));
  }
  return out;
}

ComplexMatrix matrix_exponential_hermitian(const ComplexMatrix& h, double scale) {
  const EigenDecomposition eig = hermitian_eigensolve(h);
  RealVector exponents = scale * eig.values;
  const double worst = exponents.cwiseAbs().maxCoeff();
  if (!std::isfinite(worst) || worst > kMaxExponent) {
    std::ostringstream os;
    os << "matrix_exponential_hermitian: |scale * lambda| = " << worst
       << " exceeds the representable range (" << kMaxExponent << ")";
    throw OverflowError(os.str());
  }
  const RealVector diag = exponents.array().exp();
  ComplexMatrix out = eig.vectors * diag.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

QRDecomposition qr_decompose(const ComplexMatrix& m) {
  if (!is_square(m)) {
    throw LinalgError("qr_decompose: expected a square matrix, got " + shape_of(m));
  }
  if (!m.allFinite()) {
    throw LinalgError("qr_decompose: matrix has non-finite entries");
  }
  const Eigen::Index n = m.rows();
  QRDecomposition out{ComplexMatrix::Zero(n, n), ComplexMatrix::Zero(n, n)};
  const double rank_tol = 1e-10 * std::max(m.colwise().norm().maxCoeff(), 1e-300);

  for (Eigen::Index j = 0; j < n; ++j) {
    Statevector v = m.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const Complex c = out.q.col(i).dot(v);  // q_i^dagger v
        out.r(i, j) += c;
        v -= c * out.q.col(i);
      }
    }
    const double norm = v.norm();
    if (norm <= rank_tol) {
      std::ostringstream os;
      os << "qr_decompose: matrix is rank deficient (column " << j
         << " has residual norm " << norm << ")";
      throw LinalgError(os.str());
    }
    out.r(j, j) = Complex(norm, 0.0);
    out.q.col(j) = v / norm;
  }
  return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
  const EigenDecomposition eig = hermitian_eigensolve(a);
  const double floor = -1e-9 * std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  if (eig.values(0) < floor) {
    std::ostringstream os;
    os << "sqrt_psd: matrix is not positive semidefinite (min eigenvalue "
       << eig.values(0) << ")";
    throw LinalgError(os.str());
  }
  const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
  ComplexMatrix out = eig.vectors * roots.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m = [] {
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    return x;
  }();
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m = [] {
    ComplexMatrix y(2, 2);
    y << 0.0, -kI, kI, 0.0;
    return y;
  }();
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m = [] {
    ComplexMatrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    return z;
  }();
  return m;
}

const ComplexMatrix& identity2() {
  static const ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  return m;
}

}  // namespace qgtsim
