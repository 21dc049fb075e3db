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

#include "qgtsim/nonabelian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "qgtsim/errors.hpp"
#include "qgtsim/qgt.hpp"

namespace qgtsim {
namespace {

constexpr double kDegeneracyTol = 1e-8;
constexpr double kMinProjection = 1e-6;

ComplexMatrix outer(const Statevector& v) { return v * v.adjoint(); }

std::array<double, 2> shift(int d, double step) {
  return d == 0 ? std::array<double, 2>{step, 0.0} : std::array<double, 2>{0.0, step};
}

void merge_flags(std::vector<std::string>& into, const ScalarRecovery& r) {
  if (r.trace_fallback &&
      std::find(into.begin(), into.end(), "trace_fallback") == into.end()) {
    into.push_back("trace_fallback");
  }
}

Complex off_diagonal(Complex xii, Complex xjj, Complex xmm, Complex xn) {
  const Complex two_i(0.0, 2.0);
  return (two_i * xmm + 2.0 * xn - Complex(1.0, 1.0) * (xii + xjj)) / two_i;
}

// d_a psi_i by the stencil's scheme.
Statevector dpsi(const ProjectorStencil& s, int d, int band) {
  auto pick = [band](const DegenerateProjectors& p) -> const Statevector& {
    return band == 0 ? p.psi1 : p.psi2;
  };
  if (s.scheme == DifferenceScheme::kForward) {
    return (pick(s.plus[d]) - pick(s.at_k)) / s.delta;
  }
  return (pick(s.plus[d]) - pick(s.minus[d])) / (2.0 * s.delta);
}

Eigen::Matrix2cd q_block(const ProjectorStencil& s, int a, int b) {
  Eigen::Matrix2cd q;
  for (int i = 0; i < 2; ++i) {
    const Statevector da = dpsi(s, a, i);
    for (int j = 0; j < 2; ++j) q(i, j) = da.dot(s.at_k.pe * dpsi(s, b, j));
  }
  return q;
}

}  // namespace

HamiltonianField gamma_model_field(double m) {
  return [m](double k_mu, double k_nu) {
    return gamma_model_hamiltonian(GammaModelPoint::at(k_mu, k_nu, m));
  };
}

ReferenceGauge ReferenceGauge::standard() {
  ReferenceGauge g;
  g.e1 = Statevector::Unit(4, 0);
  g.e2 = Statevector::Unit(4, 1);
  return g;
}

ReferenceGauge ReferenceGauge::rotated(const ComplexMatrix& w) const {
  if (w.rows() != 2 || w.cols() != 2) throw ConfigError("gauge rotation must be 2x2");
  return {e1 * w(0, 0) + e2 * w(1, 0), e1 * w(0, 1) + e2 * w(1, 1)};
}

DegenerateProjectors build_subspace_projectors(const ComplexMatrix& h,
                                               const ReferenceGauge& gauge) {
  if (h.rows() != 4 || h.cols() != 4) throw ConfigError("expected a 4x4 Hamiltonian");
  if (gauge.e1.size() != 4 || gauge.e2.size() != 4) {
    throw ConfigError("reference vectors must have four components");
  }
  const EigenDecomposition eig = hermitian_eigensolve(h);
  const auto& w = eig.values;
  if (std::abs(w[1] - w[0]) > kDegeneracyTol) {
    std::ostringstream os;
    os << "ground level is not degenerate: split " << (w[1] - w[0]);
    throw LinalgError(os.str());
  }
  if (w[2] - w[1] <= kDegeneracyTol) {
    throw GaplessPointError("ground pair is not separated from the excited pair");
  }

  DegenerateProjectors out;
  const ComplexMatrix v = eig.vectors.leftCols(2);
  out.pg = v * v.adjoint();
  out.pe = ComplexMatrix::Identity(4, 4) - out.pg;

  const Statevector a = out.pg * gauge.e1;
  if (a.norm() < kMinProjection) {
    throw LinalgError("first reference vector is orthogonal to the ground subspace");
  }
  out.psi1 = a / a.norm();
  Statevector b = out.pg * gauge.e2;
  b -= out.psi1 * out.psi1.dot(b);
  if (b.norm() < kMinProjection) {
    throw LinalgError("second reference vector projects onto the first");
  }
  out.psi2 = b / b.norm();

  const double r = 1.0 / std::sqrt(2.0);
  out.p1 = outer(out.psi1);
  out.p2 = outer(out.psi2);
  out.pm = outer(r * (out.psi1 + out.psi2));
  out.pn = outer(r * (out.psi1 + kI * out.psi2));
  out.pn_swapped = outer(r * (out.psi2 + kI * out.psi1));
  return out;
}

ComplexMatrix ProjectorStencil::dpg(int d) const {
  if (scheme == DifferenceScheme::kForward) {
    return projector_derivative(at_k.pg, plus[d].pg, delta);
  }
  return projector_derivative_central(minus[d].pg, plus[d].pg, delta);
}

ProjectorStencil sample_stencil(const HamiltonianField& field, double k_mu, double k_nu,
                                double delta, DifferenceScheme scheme,
                                const ReferenceGauge& gauge) {
  if (!(delta > 0.0)) throw ConfigError("sample_stencil: delta must be positive");
  ProjectorStencil s;
  s.delta = delta;
  s.scheme = scheme;
  s.at_k = build_subspace_projectors(field(k_mu, k_nu), gauge);
  for (int d = 0; d < 2; ++d) {
    const auto up = shift(d, delta);
    s.plus[d] = build_subspace_projectors(field(k_mu + up[0], k_nu + up[1]), gauge);
    if (scheme == DifferenceScheme::kCentral) {
      s.minus[d] = build_subspace_projectors(field(k_mu - up[0], k_nu - up[1]), gauge);
    }
  }
  return s;
}

DiagonalComponents extract_diagonal_components(const ProjectorStencil& s, int a, int b,
                                               double robust_eps) {
  if (a < 0 || a > 1 || b < 0 || b > 1) throw ConfigError("direction index must be 0 or 1");
  const ComplexMatrix da = s.dpg(a);
  const ComplexMatrix db = s.dpg(b);
  const ComplexMatrix lab = da * s.at_k.pe * db;
  const ComplexMatrix lba = db * s.at_k.pe * da;
  const ComplexMatrix sym = 0.5 * (lab + lba);
  const ComplexMatrix asym = kI * (lab - lba);

  DiagonalComponents out;
  auto recover = [&](const ComplexMatrix& p, Complex& g, Complex& f) {
    const ScalarRecovery rg = recover_scalar(p * sym * p, p, robust_eps);
    const ScalarRecovery rf = recover_scalar(p * asym * p, p, robust_eps);
    g = rg.value;
    f = rf.value;
    merge_flags(out.flags, rg);
    merge_flags(out.flags, rf);
  };
  recover(s.at_k.p1, out.g11, out.f11);
  recover(s.at_k.p2, out.g22, out.f22);
  recover(s.at_k.pm, out.gmm, out.fmm);
  recover(s.at_k.pn, out.gnn, out.fnn);
  recover(s.at_k.pn_swapped, out.gnn_swapped, out.fnn_swapped);
  return out;
}

OffDiagonalComponents extract_offdiagonal_components(const DiagonalComponents& d) {
  OffDiagonalComponents out;
  out.g12 = off_diagonal(d.g11, d.g22, d.gmm, d.gnn);
  out.g21 = off_diagonal(d.g22, d.g11, d.gmm, d.gnn_swapped);
  out.f12 = off_diagonal(d.f11, d.f22, d.fmm, d.fnn);
  out.f21 = off_diagonal(d.f22, d.f11, d.fmm, d.fnn_swapped);
  out.hermiticity_residual =
      std::max(std::abs(out.g12 - std::conj(out.g21)), std::abs(out.f12 - std::conj(out.f21)));
  return out;
}

NonAbelianQGT assemble_nonabelian_qgt(const HamiltonianField& field, double k_mu, double k_nu,
                                      double delta, DifferenceScheme scheme,
                                      const ReferenceGauge& gauge, double robust_eps) {
  const ProjectorStencil s = sample_stencil(field, k_mu, k_nu, delta, scheme, gauge);
  NonAbelianQGT out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const DiagonalComponents d = extract_diagonal_components(s, a, b, robust_eps);
      const OffDiagonalComponents o = extract_offdiagonal_components(d);
      out.g[a][b] << d.g11, o.g12, o.g21, d.g22;
      out.f[a][b] << d.f11, o.f12, o.f21, d.f22;
      out.hermiticity_residual = std::max(out.hermiticity_residual, o.hermiticity_residual);
      for (const auto& flag : d.flags) {
        if (std::find(out.flags.begin(), out.flags.end(), flag) == out.flags.end()) {
          out.flags.push_back(flag);
        }
      }
    }
  }
  return out;
}

Eigen::Matrix2cd oracle_q_block(const HamiltonianField& field, double k_mu, double k_nu,
                                double delta, DifferenceScheme scheme,
                                const ReferenceGauge& gauge, int a, int b) {
  return q_block(sample_stencil(field, k_mu, k_nu, delta, scheme, gauge), a, b);
}

NonAbelianQGT oracle_nonabelian_qgt(const HamiltonianField& field, double k_mu, double k_nu,
                                    double delta, DifferenceScheme scheme,
                                    const ReferenceGauge& gauge) {
  const ProjectorStencil s = sample_stencil(field, k_mu, k_nu, delta, scheme, gauge);
  NonAbelianQGT out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Eigen::Matrix2cd q = q_block(s, a, b);
      out.g[a][b] = 0.5 * (q + q.adjoint());
      out.f[a][b] = kI * (q - q.adjoint());
    }
  }
  return out;
}

}  // namespace qgtsim
