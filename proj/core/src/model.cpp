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

#include "qgtsim/model.hpp"

#include <cmath>
#include <sstream>

#include "qgtsim/errors.hpp"

namespace qgtsim {
namespace {

using Vec3 = Eigen::Vector3d;

Vec3 to_vec(const BlochVector& d) { return {d.x, d.y, d.z}; }

void require_gapped(const BlochVector& d, const ModelPoint& p) {
  if (d.gapless()) {
    std::ostringstream os;
    os.precision(17);
    os << "gapless point: |d| = " << d.norm() << " at (kx=" << p.kx << ", ky=" << p.ky
       << ", m=" << p.m << ")";
    throw GaplessPointError(os.str());
  }
}

// Ground state at p, phase aligned so that <reference|psi> is real positive.
Statevector aligned_ground_state(const ModelPoint& p, const Statevector& reference) {
  Statevector psi = exact_ground_state(p);
  const Complex overlap = reference.dot(psi);
  if (std::abs(overlap) < 1e-12) {
    throw Error("oracle_qgt: neighbouring ground states are orthogonal; delta is too large");
  }
  psi *= std::conj(overlap) / std::abs(overlap);
  return psi;
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector bloch_vector(const ModelPoint& p) {
  return {std::sin(p.kx), std::sin(p.ky), p.m - std::cos(p.kx) - std::cos(p.ky)};
}

ComplexMatrix build_hamiltonian(const BlochVector& d) {
  return d.x * pauli_x() + d.y * pauli_y() + d.z * pauli_z();
}

Statevector exact_ground_state(const ModelPoint& p) {
  const BlochVector d = bloch_vector(p);
  require_gapped(d, p);
  return hermitian_eigensolve(build_hamiltonian(d)).vectors.col(0);
}

ComplexMatrix exact_ground_projector(const ModelPoint& p) {
  const Statevector psi = exact_ground_state(p);
  return psi * psi.adjoint();
}

QGTPoint oracle_qgt(const ModelPoint& p, double delta, DifferenceScheme scheme) {
  if (!(delta > 0.0)) throw ConfigError("oracle_qgt: delta must be positive");
  const Statevector psi = exact_ground_state(p);
  const ComplexMatrix excited = ComplexMatrix::Identity(2, 2) - psi * psi.adjoint();

  auto shifted = [&](double dkx, double dky) {
    return aligned_ground_state({p.kx + dkx, p.ky + dky, p.m}, psi);
  };
  Statevector dx, dy;
  if (scheme == DifferenceScheme::kForward) {
    dx = (shifted(delta, 0.0) - psi) / delta;
    dy = (shifted(0.0, delta) - psi) / delta;
  } else {
    dx = (shifted(delta, 0.0) - shifted(-delta, 0.0)) / (2.0 * delta);
    dy = (shifted(0.0, delta) - shifted(0.0, -delta)) / (2.0 * delta);
  }
  auto q = [&](const Statevector& a, const Statevector& b) { return a.dot(excited * b); };
  const Complex qxy = q(dx, dy);
  const Complex qyx = q(dy, dx);

  QGTPoint out;
  out.g_xx = q(dx, dx).real();
  out.g_yy = q(dy, dy).real();
  out.g_xy = (0.5 * (qxy + qyx)).real();
  out.f_xy = (kI * (qxy - qyx)).real();
  return out;
}

QGTPoint analytic_qgt(const ModelPoint& p) {
  const BlochVector d = bloch_vector(p);
  require_gapped(d, p);
  const Vec3 dv = to_vec(d);
  const double r = dv.norm();
  const Vec3 n = dv / r;
  const Vec3 ddx{std::cos(p.kx), 0.0, std::sin(p.kx)};
  const Vec3 ddy{0.0, std::cos(p.ky), std::sin(p.ky)};
  const Vec3 nx = (ddx - n * n.dot(ddx)) / r;
  const Vec3 ny = (ddy - n * n.dot(ddy)) / r;

  QGTPoint out;
  out.g_xx = 0.25 * nx.dot(nx);
  out.g_xy = 0.25 * nx.dot(ny);
  out.g_yy = 0.25 * ny.dot(ny);
  out.f_xy = 0.5 * n.dot(nx.cross(ny));
  return out;
}

GammaModelPoint GammaModelPoint::at(double k_mu, double k_nu, double m) {
  GammaModelPoint q;
  q.k_mu = k_mu;
  q.k_nu = k_nu;
  q.m = m;
  q.d5 = {std::sin(k_mu), std::sin(k_nu), 0.0, 0.0, m - std::cos(k_mu) - std::cos(k_nu)};
  return q;
}

double GammaModelPoint::norm() const {
  double s = 0.0;
  for (double v : d5) s += v * v;
  return std::sqrt(s);
}

const std::array<ComplexMatrix, 5>& gamma_matrices() {
  static const std::array<ComplexMatrix, 5> gammas = {
      kron(pauli_x(), pauli_x()), kron(pauli_x(), pauli_y()), kron(pauli_x(), pauli_z()),
      kron(pauli_y(), identity2()), kron(pauli_z(), identity2())};
  return gammas;
}

ComplexMatrix gamma_model_hamiltonian(const GammaModelPoint& q) {
  if (q.norm() <= BlochVector::kGaplessThreshold) {
    std::ostringstream os;
    os << "gapless Gamma-model point: |d5| = " << q.norm();
    throw GaplessPointError(os.str());
  }
  ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  const auto& gammas = gamma_matrices();
  for (std::size_t a = 0; a < gammas.size(); ++a) h += q.d5[a] * gammas[a];
  return h;
}

}  // namespace qgtsim
