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

#include "qgtsim/ite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qgtsim {

ComplexMatrix ite_operator(const ComplexMatrix& h, double tau) {
  if (!(tau > 0.0)) throw ConfigError("ite_operator: tau must be positive");
  return matrix_exponential_hermitian(h, -tau);
}

EmbeddingResult embed_unitary(const ComplexMatrix& u_tb, double tau) {
  if (u_tb.rows() != 2 || u_tb.cols() != 2) {
    throw LinalgError("embed_unitary expects a 2x2 operator");
  }
  const ComplexMatrix gram = u_tb.adjoint() * u_tb;
  const double lambda_max = hermitian_eigensolve(0.5 * (gram + gram.adjoint())).values.maxCoeff();
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw LinalgError("embed_unitary: operator is zero or not finite");
  }

  EmbeddingResult out;
  out.tau = tau;
  out.u = 1.0 / std::sqrt(lambda_max);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  out.c_block = sqrt_psd(id - out.u * out.u * gram);

  ComplexMatrix m(4, 4);
  m.topLeftCorner(2, 2) = out.u * u_tb;
  m.topRightCorner(2, 2) = id;
  m.bottomLeftCorner(2, 2) = out.c_block;
  m.bottomRightCorner(2, 2) = id;
  QRDecomposition qr = qr_decompose(m);
  out.unitary = std::move(qr.q);
  out.r = std::move(qr.r);
  return out;
}

void IteConfig::validate() const {
  if (!(tau > 0.0)) throw ConfigError("ite: tau must be positive");
  if (!(min_success > 0.0 && min_success <= 1.0)) {
    throw ConfigError("ite: min_success must lie in (0, 1]");
  }
}

BlochVector initial_bloch_vector(InitialState s) {
  return s == InitialState::kUp ? BlochVector{0.0, 0.0, 1.0} : BlochVector{1.0, 0.0, 0.0};
}

Circuit ite_circuit(const EmbeddingResult& e, InitialState s) {
  Circuit c;
  c.num_qubits = 2;
  if (s == InitialState::kPlus) c.gates.push_back(Gate::u3(1, 0.5 * std::numbers::pi, 0.0, 0.0));
  c.gates.push_back(Gate::two_qubit(0, 1, e.unitary));
  return c;
}

PreparedProjector prepare_ground_projector_ite(const ModelPoint& p, const ExecutionMode& mode,
                                               const IteConfig& cfg, bool purify) {
  cfg.validate();
  const BlochVector d = bloch_vector(p);
  if (d.gapless()) throw GaplessPointError("prepare_ground_projector_ite: gapless point");

  const BlochVector r0 = initial_bloch_vector(cfg.initial);
  const double r = d.norm();
  const double misalignment =
      std::sqrt(std::pow(d.x - r * r0.x, 2) + std::pow(d.y - r * r0.y, 2) +
                std::pow(d.z - r * r0.z, 2));
  if (misalignment < 1e-6) {
    std::ostringstream os;
    os << "ite: initial state is the excited state at (kx=" << p.kx << ", ky=" << p.ky
       << ", m=" << p.m << "); retry with the |+> initial state";
    throw OverlapGuardError(os.str());
  }

  const EmbeddingResult e = embed_unitary(ite_operator(build_hamiltonian(d), cfg.tau), cfg.tau);
  const PauliMeasurement m =
      measure_pauli_expectations(ite_circuit(e, cfg.initial), zero_state(2), 1, 0, mode);
  if (m.success_fraction < cfg.min_success) {
    std::ostringstream os;
    os << "ite: post-selection rate " << m.success_fraction << " below " << cfg.min_success;
    throw PostSelectionError(os.str());
  }
  PreparedProjector out;
  out.expectations = m.expectations;
  out.success_fraction = m.success_fraction;
  out.projector = reconstruct_projector(m.expectations, purify);
  return out;
}

}  // namespace qgtsim
