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

#include "qgtsim/circuit.hpp"
#include "qgtsim/errors.hpp"
#include "qgtsim/model.hpp"
#include "qgtsim/tomography.hpp"

namespace qgtsim {

/// e^{-tau H}. Throws ConfigError for tau <= 0 and OverflowError when the
/// exponent leaves the double range.
ComplexMatrix ite_operator(const ComplexMatrix& h, double tau);

/// Unitary dilation of a 2x2 non-unitary operator onto ancilla (x) system,
/// ancilla as the high bit.
struct EmbeddingResult {
  /// lambda_max(U^dagger U)^{-1/2}.
  double u = 1.0;
  /// 4x4 unitary whose upper-left block equals u * U.
  ComplexMatrix unitary;
  /// sqrt(I - u^2 U^dagger U).
  ComplexMatrix c_block;
  /// Triangular factor of the QR step.
  ComplexMatrix r;
  double tau = 0.0;
};

/// Scales U to unit operator norm, completes it to
/// M = [[uU, I], [C, I]] and orthonormalizes M by QR. The first block column
/// of M is already orthonormal, so the QR sign convention leaves it intact.
EmbeddingResult embed_unitary(const ComplexMatrix& u_tb, double tau = 0.0);

/// Physical-qubit initial state before imaginary-time evolution.
enum class InitialState { kUp, kPlus };

struct IteConfig {
  double tau = 8.0;
  InitialState initial = InitialState::kUp;
  /// Smallest accepted ancilla post-selection rate.
  double min_success = 1e-4;

  void validate() const;
};

/// The initial physical state is (numerically) the excited state of H, so
/// imaginary-time evolution cannot reach the ground state. Retry with
/// InitialState::kPlus.
class OverlapGuardError : public Error {
 public:
  using Error::Error;
};

/// Bloch vector of the initial physical state.
BlochVector initial_bloch_vector(InitialState s);

/// Two-qubit circuit: optional U3(pi/2, 0, 0) on the physical wire 1, then
/// the embedding unitary on (ancilla 0, physical 1). No measurement.
Circuit ite_circuit(const EmbeddingResult& e, InitialState s);

/// Prepares P_g at p by imaginary-time evolution and ancilla post-selection,
/// measuring sigma_x, sigma_y, sigma_z of the physical qubit on three
/// circuits. success_fraction is the mean post-selection rate.
PreparedProjector prepare_ground_projector_ite(const ModelPoint& p, const ExecutionMode& mode,
                                               const IteConfig& cfg = {}, bool purify = true);

}  // namespace qgtsim
