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

#include <array>
#include <string>
#include <vector>

#include "qgtsim/linalg.hpp"

namespace qgtsim {

/// Momentum-space point of the two-band model together with the mass term m.
struct ModelPoint {
  double kx = 0.0;
  double ky = 0.0;
  double m = 1.0;
};

/// Coefficients of H = d . sigma.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  /// |d| below this is treated as a band touching.
  static constexpr double kGaplessThreshold = 1e-12;
  bool gapless() const { return norm() <= kGaplessThreshold; }
};

/// Quantum metric and Berry curvature at one momentum point.
struct QGTPoint {
  double g_xx = 0.0;
  double g_xy = 0.0;
  double g_yy = 0.0;
  double f_xy = 0.0;
  /// Largest non-physical residue seen while recovering the scalars: the
  /// imaginary parts of the averaged metric and curvature quotients.
  double residue = 0.0;
  std::vector<std::string> flags;
};

enum class DifferenceScheme { kForward, kCentral };

/// d = (sin kx, sin ky, m - cos kx - cos ky).
BlochVector bloch_vector(const ModelPoint& p);

/// H = d_x sigma_x + d_y sigma_y + d_z sigma_z.
ComplexMatrix build_hamiltonian(const BlochVector& d);

/// Lower eigenvector of H(p) in the deterministic eigensolver gauge.
/// Throws GaplessPointError when |d| <= 1e-12.
Statevector exact_ground_state(const ModelPoint& p);

/// |psi_g><psi_g| at p. Throws GaplessPointError at band touchings.
ComplexMatrix exact_ground_projector(const ModelPoint& p);

/// QGT of the ground band from finite differences of exact eigenvectors,
/// Q_mu_nu = <d_mu psi|(1 - P_g)|d_nu psi>.
///
/// Neighbouring eigenvectors are phase aligned to psi(k) (parallel transport)
/// before differencing, so the result is free of gauge jumps. g_xy is the
/// symmetrized real part and F_xy = -2 Im Q_xy.
QGTPoint oracle_qgt(const ModelPoint& p, double delta,
                    DifferenceScheme scheme = DifferenceScheme::kForward);

/// Closed-form QGT of a two-band model, with n = d/|d|:
/// g_mu_nu = (1/4) d_mu n . d_nu n and F_xy = (1/2) n . (d_x n x d_y n).
QGTPoint analytic_qgt(const ModelPoint& p);

// ---------------------------------------------------------------------------
// Four-band model with twofold-degenerate bands.
//
// The five Dirac matrices are fixed as
//   Gamma_1 = sx (x) sx,  Gamma_2 = sx (x) sy,  Gamma_3 = sx (x) sz,
//   Gamma_4 = sy (x) 1,   Gamma_5 = sz (x) 1,
// with the left factor the most significant qubit. They satisfy
// {Gamma_a, Gamma_b} = 2 delta_ab.

struct GammaModelPoint {
  double k_mu = 0.0;
  double k_nu = 0.0;
  double m = 1.0;
  std::array<double, 5> d5{};

  /// d5 = (sin k_mu, sin k_nu, 0, 0, m - cos k_mu - cos k_nu).
  static GammaModelPoint at(double k_mu, double k_nu, double m);
  double norm() const;
};

const std::array<ComplexMatrix, 5>& gamma_matrices();

/// H = sum_a d5_a Gamma_a. Throws GaplessPointError when |d5| <= 1e-12.
ComplexMatrix gamma_model_hamiltonian(const GammaModelPoint& q);

}  // namespace qgtsim
