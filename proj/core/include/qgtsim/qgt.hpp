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

#include <cmath>
#include <numbers>
#include <span>

#include "qgtsim/linalg.hpp"
#include "qgtsim/model.hpp"

namespace qgtsim {

/// (P(k + delta) - P(k)) / delta. Throws ConfigError for delta <= 0.
ComplexMatrix projector_derivative(const ComplexMatrix& p_at_k, const ComplexMatrix& p_at_k_plus,
                                   double delta);

/// (P(k + delta) - P(k - delta)) / (2 delta).
ComplexMatrix projector_derivative_central(const ComplexMatrix& p_minus,
                                           const ComplexMatrix& p_plus, double delta);

/// A scalar s recovered from a matrix identity L = s P by element-wise division.
struct ScalarRecovery {
  Complex value{0.0, 0.0};
  int used = 0;
  /// Elements skipped because |P_ij| < robust_eps (nonzero ones only).
  int excluded = 0;
  bool trace_fallback = false;
};

/// Averages L_ij / P_ij over the elements with |P_ij| >= robust_eps, or over
/// all nonzero P_ij when robust_eps is 0. When no element qualifies the
/// value falls back to Tr(L) / Tr(P).
ScalarRecovery recover_scalar(const ComplexMatrix& l, const ComplexMatrix& p, double robust_eps);

/// Metric and curvature of the band projected by p_g, from the projector
/// derivatives along x and y:
///   (dP_mu P_e dP_nu + dP_nu P_e dP_mu) / 2 = g_mu_nu P_g,
///   i (dP_x P_e dP_y - dP_y P_e dP_x)      = F_xy P_g.
/// Flags: "robust_excluded=<n>" and "trace_fallback".
QGTPoint extract_qgt(const ComplexMatrix& p_g, const ComplexMatrix& p_e,
                     const ComplexMatrix& dp_x, const ComplexMatrix& dp_y,
                     double robust_eps = 0.05);

/// Projector-method QGT of the exact ground band at p.
QGTPoint exact_projector_qgt(const ModelPoint& p, double delta,
                             DifferenceScheme scheme = DifferenceScheme::kForward,
                             double robust_eps = 0.05);

/// Square momentum grid k_i = 2 pi i / n, i in [0, n), with finite-difference
/// step delta.
struct GridSpec {
  int n = 15;
  double delta = 0.04 * std::numbers::pi;
  double m = 1.0;

  double k(int i) const { return 2.0 * std::numbers::pi * i / n; }
  /// Point index -> ModelPoint, index = ix * n + iy.
  ModelPoint point(int index) const { return {k(index / n), k(index % n), m}; }
  int size() const { return n * n; }
  /// n >= 3 and 0 < delta < 2 pi / n.
  void validate() const;
};

/// (1 / 2 pi) sum_k F_xy(k) (2 pi / n)^2 over a complete field indexed as
/// GridSpec::point. Throws ConfigError on a wrong size or non-finite entry.
double chern_number(std::span<const double> f_xy, const GridSpec& grid);

}  // namespace qgtsim
