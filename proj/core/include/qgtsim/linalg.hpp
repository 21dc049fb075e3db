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

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qgtsim {

using Complex = std::complex<double>;
/// Small dense complex matrix (2x2, 4x4 or 8x8 in practice).
using ComplexMatrix = Eigen::MatrixXcd;
using Statevector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Structural predicates. Tolerances are absolute on entries scaled by
// max(1, max|a_ij|), so they stay meaningful for e^{tau H}-sized matrices.
bool is_square(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-10);
bool is_psd(const ComplexMatrix& a, double tol = 1e-10);
bool is_upper_triangular(const ComplexMatrix& a, double tol = 1e-12);
/// P^2 = P and P = P^dagger.
bool is_projector(const ComplexMatrix& a, double tol = 1e-10);

/// Largest |a_ij|.
double max_abs(const ComplexMatrix& a);
/// Trace norm distance 0.5 * || a - b ||_1 for Hermitian arguments.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // orthonormal columns, values(i) <-> vectors.col(i)
};

/// Eigen-decomposition of a Hermitian matrix.
///
/// 2x2 inputs use the closed form; larger inputs use Eigen's self-adjoint
/// solver. Every eigenvector is phase fixed so that its largest-magnitude
/// component (first one on ties) is real and positive.
///
/// Throws LinalgError if `a` is not square or not Hermitian within 1e-10.
EigenDecomposition hermitian_eigensolve(const ComplexMatrix& a);

/// Multiplies `v` by the phase that makes its largest component real positive.
void fix_phase_gauge(Eigen::Ref<Statevector> v);

/// e^{scale * H} = V diag(e^{scale * lambda_i}) V^dagger for Hermitian H.
/// Throws OverflowError when |scale * lambda| exceeds the double range.
ComplexMatrix matrix_exponential_hermitian(const ComplexMatrix& h, double scale);

struct QRDecomposition {
  ComplexMatrix q;  // unitary
  ComplexMatrix r;  // upper triangular, real positive diagonal
};

/// QR by modified Gram-Schmidt with one re-orthogonalization pass.
///
/// R has a real positive diagonal. With that convention a leading block of
/// orthonormal columns in `m` is reproduced verbatim in Q. Throws LinalgError
/// for non-square or numerically rank-deficient input.
QRDecomposition qr_decompose(const ComplexMatrix& m);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything more negative is rejected.
ComplexMatrix sqrt_psd(const ComplexMatrix& a);

/// Kronecker product a (x) b; a indexes the most significant factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrices and the 2x2 identity.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& identity2();

}  // namespace qgtsim
