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

#include <string>
#include <vector>

#include "qgtsim/circuit.hpp"

namespace qgtsim {

enum class Pauli { kX = 0, kY = 1, kZ = 2 };

const char* pauli_name(Pauli p);

struct PauliExpectations {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;

  double& operator[](Pauli p);
  double operator[](Pauli p) const;
  double bloch_norm() const;
};

/// (n0 - n1) / (n0 + n1) on single-bit counts. For integer counts the
/// denominator equals the shot number.
template <typename T>
double expectation_from_counts(const BasicCounts<T>& c);

extern template double expectation_from_counts(const Counts&);
extern template double expectation_from_counts(const QuasiCounts&);

/// Gates appended before a z measurement so that it reads out the given Pauli:
/// x -> RY(-pi/2), y -> RX(pi/2), z -> nothing.
std::vector<Gate> basis_rotation_gates(Pauli p, int qubit);

/// <psi|sigma|psi> for a single-qubit state.
double exact_expectation(const Statevector& psi, Pauli p);
PauliExpectations exact_expectations(const Statevector& psi);

/// rho = (I + s . sigma)/2, i.e. alpha = (1+sz)/2, beta = (sx - i sy)/2.
/// With purify the Bloch vector is rescaled to unit length first, giving an
/// exact rank-1 projector; a vanishing Bloch vector then throws.
ComplexMatrix reconstruct_projector(const PauliExpectations& e, bool purify = true);

/// Applies the inverse of the per-bit confusion matrix [[1-q, q], [q, 1-q]]
/// to the measured distribution, clamps negative weights and renormalizes
/// to the shot total. Throws ConfigError for q outside [0, 0.5).
QuasiCounts readout_mitigation(const Counts& c, double q);
QuasiCounts readout_mitigation(const QuasiCounts& c, double q);

/// Result of the three-circuit Pauli measurement of one prepared state.
struct PauliMeasurement {
  PauliExpectations expectations;
  /// Mean ancilla post-selection rate over the three circuits (1 without ancilla).
  double success_fraction = 1.0;
};

/// Appends the basis rotation for each Pauli to `prep`, measures, optionally
/// post-selects `ancilla` on 0, and converts to an expectation of the
/// physical qubit. In shot mode the circuit for Pauli p uses seed
/// mix_seed(mode.seed, p).
PauliMeasurement measure_pauli_expectations(const Circuit& prep, const Statevector& initial,
                                            int physical, int ancilla,
                                            const ExecutionMode& mode);

/// A reconstructed ground-state projector and how it was obtained.
struct PreparedProjector {
  ComplexMatrix projector;
  PauliExpectations expectations;
  double success_fraction = 1.0;
  std::vector<std::string> flags;
};

}  // namespace qgtsim
