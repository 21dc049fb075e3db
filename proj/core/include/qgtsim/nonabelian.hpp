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
#include <functional>
#include <string>
#include <vector>

#include "qgtsim/linalg.hpp"
#include "qgtsim/model.hpp"

namespace qgtsim {

/// H(k_mu, k_nu) for a four-band model with a twofold-degenerate lower level.
using HamiltonianField = std::function<ComplexMatrix(double k_mu, double k_nu)>;

/// The Gamma-model field at mass m.
HamiltonianField gamma_model_field(double m);

/// Fixed vectors whose projections onto the ground subspace define the
/// degenerate basis. Defaults to the first two computational basis vectors.
struct ReferenceGauge {
  Statevector e1;
  Statevector e2;

  static ReferenceGauge standard();
  /// Rotates the pair by the 2x2 unitary w: e'_j = sum_i e_i w_ij.
  ReferenceGauge rotated(const ComplexMatrix& w) const;
};

/// Ground-subspace basis at one k and the projectors built from it.
struct DegenerateProjectors {
  Statevector psi1;
  Statevector psi2;
  ComplexMatrix p1;
  ComplexMatrix p2;
  /// |M> = (|1> + |2>) / sqrt(2).
  ComplexMatrix pm;
  /// |N> = (|1> + i|2>) / sqrt(2).
  ComplexMatrix pn;
  /// |N'> = (|2> + i|1>) / sqrt(2), the N state with the band roles swapped.
  ComplexMatrix pn_swapped;
  ComplexMatrix pg;
  ComplexMatrix pe;
};

/// Diagonalizes h, checks that the two lowest levels are degenerate
/// (split <= 1e-8) and gapped from the rest (> 1e-8), and builds the basis
/// psi1 = normalize(Pg e1), psi2 = normalize(Pg e2 - psi1 <psi1|Pg e2>).
/// Throws LinalgError if either projection has norm below 1e-6.
DegenerateProjectors build_subspace_projectors(const ComplexMatrix& h,
                                               const ReferenceGauge& gauge);

/// Projector data at k and at the shifted points needed by one scheme.
/// Forward uses plus[d]; central uses plus[d] and minus[d]. d = 0 is mu, 1 is nu.
struct ProjectorStencil {
  double delta = 0.0;
  DifferenceScheme scheme = DifferenceScheme::kForward;
  DegenerateProjectors at_k;
  std::array<DegenerateProjectors, 2> plus;
  std::array<DegenerateProjectors, 2> minus;

  /// Finite-difference derivative of Pg along direction d.
  ComplexMatrix dpg(int d) const;
};

ProjectorStencil sample_stencil(const HamiltonianField& field, double k_mu, double k_nu,
                                double delta, DifferenceScheme scheme,
                                const ReferenceGauge& gauge);

/// Scalars recovered from sandwiches of the pair tensor with each band
/// projector: X^a with a in {1, 2, M, N, N'}, for X = g and F.
struct DiagonalComponents {
  Complex g11, g22, gmm, gnn, gnn_swapped;
  Complex f11, f22, fmm, fnn, fnn_swapped;
  std::vector<std::string> flags;
};

/// For directions (a, b) in {0, 1}:
///   L = dPg_a Pe dPg_b,  sym = (L + L_ba) / 2,  asym = i (L - L_ba),
/// and X^a is the element-wise average of (P_a X P_a)_ij / (P_a)_ij.
DiagonalComponents extract_diagonal_components(const ProjectorStencil& s, int a, int b,
                                               double robust_eps = 0.05);

struct OffDiagonalComponents {
  Complex g12, g21, f12, f21;
  /// max(|g12 - conj(g21)|, |f12 - conj(f21)|); reported, never enforced.
  double hermiticity_residual = 0.0;
};

/// X^{ij} = [2i X^{MM} + 2 X^{N} - (1 + i)(X^{ii} + X^{jj})] / (2i), with the
/// N state of (i, j): N for 12 and N' for 21.
OffDiagonalComponents extract_offdiagonal_components(const DiagonalComponents& d);

/// Metric and curvature blocks over band indices for every direction pair.
struct NonAbelianQGT {
  /// g[a][b](i, j) = g^{ij}_{ab}; same layout for f.
  std::array<std::array<Eigen::Matrix2cd, 2>, 2> g;
  std::array<std::array<Eigen::Matrix2cd, 2>, 2> f;
  double hermiticity_residual = 0.0;
  std::vector<std::string> flags;
};

/// Projector-method extraction at (k_mu, k_nu) for all four direction pairs.
NonAbelianQGT assemble_nonabelian_qgt(const HamiltonianField& field, double k_mu, double k_nu,
                                      double delta, DifferenceScheme scheme,
                                      const ReferenceGauge& gauge, double robust_eps = 0.05);

/// Eigenvector oracle in the same gauge: Q^{ij}_{ab} = <d_a psi_i|Pe|d_b psi_j>,
/// g_ab = (Q_ab + Q_ab^dagger) / 2 and F_ab = i (Q_ab - Q_ab^dagger) over
/// band indices.
NonAbelianQGT oracle_nonabelian_qgt(const HamiltonianField& field, double k_mu, double k_nu,
                                    double delta, DifferenceScheme scheme,
                                    const ReferenceGauge& gauge);

/// Raw oracle tensor Q_ab (2x2 over band indices).
Eigen::Matrix2cd oracle_q_block(const HamiltonianField& field, double k_mu, double k_nu,
                                double delta, DifferenceScheme scheme,
                                const ReferenceGauge& gauge, int a, int b);

}  // namespace qgtsim
