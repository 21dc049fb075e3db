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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "qgtsim/errors.hpp"

namespace qgtsim {
namespace {

using oracle::random_hermitian;

TEST(Eigensolve, PauliZ) {
  const auto e = hermitian_eigensolve(pauli_z());
  EXPECT_DOUBLE_EQ(e.values[0], -1.0);
  EXPECT_DOUBLE_EQ(e.values[1], 1.0);
  EXPECT_NEAR(std::abs(e.vectors(1, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e.vectors(0, 1) - 1.0), 0.0, 1e-15);
}

TEST(Eigensolve, PauliX) {
  const auto e = hermitian_eigensolve(pauli_x());
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(e.values[0], -1.0, 1e-15);
  // Largest component real positive; ties go to the first index.
  EXPECT_NEAR(std::abs(e.vectors(0, 0) - r), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(1, 0) + r), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(0, 1) - r), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(e.vectors(1, 1) - r), 0.0, 1e-14);
}

TEST(Eigensolve, DegenerateTwoByTwoIsIdentityBasis) {
  const auto e = hermitian_eigensolve(2.5 * identity2());
  EXPECT_DOUBLE_EQ(e.values[0], 2.5);
  EXPECT_LT(max_abs(e.vectors - identity2()), 1e-15);
}

class RandomHermitian : public ::testing::TestWithParam<int> {};

TEST_P(RandomHermitian, ReconstructsAndIsOrthonormal) {
  std::mt19937_64 rng(1234 + GetParam());
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_hermitian(GetParam(), rng);
    const auto e = hermitian_eigensolve(a);
    const int n = GetParam();
    for (int i = 1; i < n; ++i) EXPECT_LE(e.values[i - 1], e.values[i]);
    for (int i = 0; i < n; ++i) {
      EXPECT_LT((a * e.vectors.col(i) - e.values[i] * e.vectors.col(i)).norm(), 1e-10);
      Eigen::Index big = 0;
      e.vectors.col(i).cwiseAbs().maxCoeff(&big);
      EXPECT_NEAR(e.vectors(big, i).imag(), 0.0, 1e-14);
      EXPECT_GT(e.vectors(big, i).real(), 0.0);
    }
    EXPECT_TRUE(is_unitary(e.vectors, 1e-10));
    const ComplexMatrix back = e.vectors * e.values.asDiagonal() * e.vectors.adjoint();
    EXPECT_LT(max_abs(back - a), 1e-10);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RandomHermitian, ::testing::Values(2, 4, 8));

TEST(Eigensolve, RejectsNonHermitian) {
  ComplexMatrix a(2, 2);
  a << 1, 2, 0, 1;
  EXPECT_THROW(hermitian_eigensolve(a), LinalgError);
}

TEST(MatrixExponential, ZeroIsIdentity) {
  EXPECT_LT(max_abs(matrix_exponential_hermitian(ComplexMatrix::Zero(2, 2), 1.0) - identity2()),
            1e-15);
}

TEST(MatrixExponential, DiagonalCase) {
  const ComplexMatrix e = matrix_exponential_hermitian(-pauli_z(), -8.0);
  EXPECT_NEAR(e(0, 0).real() / std::exp(8.0), 1.0, 1e-14);
  EXPECT_NEAR(e(1, 1).real() / std::exp(-8.0), 1.0, 1e-14);
  EXPECT_EQ(e(0, 1), Complex(0.0));
}

TEST(MatrixExponential, SpectrumAndCommutation) {
  const ComplexMatrix h = pauli_x() + pauli_y() + pauli_z();
  const ComplexMatrix e = matrix_exponential_hermitian(h, -8.0);
  const auto ev = hermitian_eigensolve(e);
  const double r = std::sqrt(3.0);
  // The small eigenvalue is only resolved relative to the large one.
  EXPECT_NEAR(ev.values[0], std::exp(-8.0 * r), 1e-12 * std::exp(8.0 * r));
  EXPECT_NEAR(ev.values[1] / std::exp(8.0 * r), 1.0, 1e-10);
  EXPECT_TRUE(is_hermitian(e));
  EXPECT_LT(max_abs(e * h - h * e) / max_abs(e), 1e-10);
}

TEST(MatrixExponential, Overflow) {
  EXPECT_THROW(matrix_exponential_hermitian(pauli_z(), 800.0), OverflowError);
}

TEST(QR, IdentityIsFixed) {
  const auto qr = qr_decompose(ComplexMatrix::Identity(4, 4));
  EXPECT_LT(max_abs(qr.q - ComplexMatrix::Identity(4, 4)), 1e-15);
  EXPECT_LT(max_abs(qr.r - ComplexMatrix::Identity(4, 4)), 1e-15);
}

TEST(QR, RandomFactorization) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix m = oracle::random_complex(4, 4, rng);
    const auto qr = qr_decompose(m);
    EXPECT_LT(max_abs(qr.q * qr.r - m), 1e-12);
    EXPECT_LT(max_abs(qr.q.adjoint() * qr.q - ComplexMatrix::Identity(4, 4)), 1e-12);
    EXPECT_TRUE(is_upper_triangular(qr.r));
    for (int i = 0; i < 4; ++i) {
      EXPECT_GT(qr.r(i, i).real(), 0.0);
      EXPECT_EQ(qr.r(i, i).imag(), 0.0);
    }
  }
}

TEST(QR, KeepsOrthonormalLeadingColumns) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    ComplexMatrix m = oracle::random_complex(4, 4, rng);
    m.leftCols(2) = oracle::random_unitary(4, rng).leftCols(2);
    const auto qr = qr_decompose(m);
    EXPECT_LT(max_abs(qr.q.leftCols(2) - m.leftCols(2)), 1e-12);
  }
}

TEST(QR, Deterministic) {
  std::mt19937_64 rng(79);
  const ComplexMatrix m = oracle::random_complex(4, 4, rng);
  const auto a = qr_decompose(m);
  const auto b = qr_decompose(m);
  EXPECT_TRUE(a.q == b.q);
  EXPECT_TRUE(a.r == b.r);
}

TEST(QR, RejectsRankDeficient) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m.col(3) = m.col(0) + m.col(1);
  EXPECT_THROW(qr_decompose(m), LinalgError);
}

TEST(SqrtPsd, Examples) {
  EXPECT_LT(max_abs(sqrt_psd(identity2()) - identity2()), 1e-15);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const ComplexMatrix s = sqrt_psd(d);
  EXPECT_NEAR(s(0, 0).real(), 2.0, 1e-14);
  EXPECT_NEAR(s(1, 1).real(), 3.0, 1e-14);
}

TEST(SqrtPsd, RandomSquaresBack) {
  std::mt19937_64 rng(80);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix b0 = oracle::random_complex(n, n, rng);
      const ComplexMatrix a = b0 * b0.adjoint();
      const ComplexMatrix b = sqrt_psd(a);
      EXPECT_TRUE(is_hermitian(b));
      EXPECT_TRUE(is_psd(b));
      EXPECT_LT(max_abs(b * b - a), 1e-10 * std::max(1.0, max_abs(a)));
      // sqrt of B^2 is B for PSD B.
      EXPECT_LT(max_abs(sqrt_psd(b * b) - b), 1e-9 * std::max(1.0, max_abs(b)));
    }
  }
}

TEST(SqrtPsd, ClampsTinyNegativesAndRejectsLarge) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  a(1, 1) = -1e-13;
  EXPECT_NO_THROW(sqrt_psd(a));
  a(1, 1) = -1e-6;
  EXPECT_THROW(sqrt_psd(a), LinalgError);
}

TEST(Predicates, Projector) {
  ComplexMatrix p = ComplexMatrix::Zero(2, 2);
  p(0, 0) = 1.0;
  EXPECT_TRUE(is_projector(p));
  p(0, 0) = 0.9;
  EXPECT_FALSE(is_projector(p));
  EXPECT_FALSE(is_square(ComplexMatrix::Zero(2, 3)));
}

TEST(Kron, LeftFactorIsHighBit) {
  const ComplexMatrix k = kron(pauli_z(), identity2());
  EXPECT_EQ(k(0, 0), Complex(1.0));
  EXPECT_EQ(k(1, 1), Complex(1.0));
  EXPECT_EQ(k(2, 2), Complex(-1.0));
  EXPECT_EQ(k(3, 3), Complex(-1.0));
}

TEST(TraceDistance, OrthogonalPureStates) {
  ComplexMatrix a = ComplexMatrix::Zero(2, 2), b = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  b(1, 1) = 1.0;
  EXPECT_NEAR(trace_distance(a, b), 1.0, 1e-15);
}

}  // namespace
}  // namespace qgtsim
