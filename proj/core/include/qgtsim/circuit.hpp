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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qgtsim/linalg.hpp"

namespace qgtsim {

// Wire convention used everywhere: qubit 0 is the top wire and the most
// significant bit of a basis index; bitstrings list measured qubits top wire
// first, so the leftmost character belongs to qubit 0 when it is measured.

enum class GateKind { kU3, kRX, kRY, kTwoQubit, kCNOT };

struct Gate {
  GateKind kind = GateKind::kU3;
  int q0 = 0;
  int q1 = -1;  // second wire for two-qubit gates, -1 otherwise
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  ComplexMatrix payload;  // 4x4 unitary for kTwoQubit, q0 as the high bit

  static Gate u3(int q, double theta, double phi, double lambda);
  static Gate rx(int q, double theta);
  static Gate ry(int q, double theta);
  static Gate two_qubit(int q0, int q1, ComplexMatrix u);
  static Gate cnot(int control, int target);

  /// Qubits the gate acts on, in order.
  std::vector<int> qubits() const;
  /// Dense 2x2 (single qubit) or 4x4 (two qubit) matrix of the gate.
  ComplexMatrix matrix() const;
};

struct Circuit {
  int num_qubits = 1;
  std::vector<Gate> gates;
  std::vector<int> measure;

  /// Throws ConfigError for out-of-range wires, repeated measured qubits,
  /// non-finite angles or a non-unitary payload.
  void validate() const;
};

struct NoiseConfig {
  /// Probability of a uniformly random Pauli after each gate on each wire it touches.
  double depolarizing_p = 0.0;
  /// Independent bit-flip probability of every recorded bit.
  double readout_q = 0.0;

  void validate() const;
  bool noiseless() const { return depolarizing_p == 0.0 && readout_q == 0.0; }
};

/// Histogram of measured bitstrings. Only keys with nonzero weight are stored.
template <typename T>
struct BasicCounts {
  std::int64_t shots = 0;
  std::map<std::string, T> histogram;
  std::uint64_t seed = 0;

  T total() const {
    T s{};
    for (const auto& kv : histogram) s += kv.second;
    return s;
  }
};

using Counts = BasicCounts<std::int64_t>;
/// Real-valued weights: exact Born probabilities or mitigated frequencies.
using QuasiCounts = BasicCounts<double>;

/// How a measurement circuit is evaluated.
struct ExecutionMode {
  bool exact = true;
  std::int64_t shots = 100000;
  std::uint64_t seed = 0;
  NoiseConfig noise;
  bool mitigate = false;

  static ExecutionMode exact_mode() { return {}; }
  static ExecutionMode sampled(std::int64_t shots, std::uint64_t seed, NoiseConfig noise = {},
                               bool mitigate = false) {
    return {false, shots, seed, noise, mitigate};
  }
};

std::uint64_t splitmix64(std::uint64_t x);
/// base ^ splitmix64(index): child seed for an indexed sub-task.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

ComplexMatrix u3_matrix(double theta, double phi, double lambda);
ComplexMatrix rx_matrix(double theta);
ComplexMatrix ry_matrix(double theta);

/// |0...0> on n qubits.
Statevector zero_state(int num_qubits);

/// Applies one gate in place.
void apply_gate(const Gate& g, int num_qubits, Statevector& psi);

/// Applies the gates of c in order to a normalized initial state.
Statevector run_statevector(const Circuit& c, const Statevector& initial);

/// Born probabilities of the measured wires, marginalized over the rest.
QuasiCounts exact_distribution(const Statevector& psi, const std::vector<int>& measure,
                               int num_qubits);

/// Multinomial draw of `shots` outcomes from the Born distribution of psi.
/// Readout flips are folded into the distribution before sampling, which is
/// the same law as flipping every recorded bit independently. Gate noise is
/// not applied here; see simulate().
Counts sample_counts(const Statevector& psi, const std::vector<int>& measure, int num_qubits,
                     std::int64_t shots, std::uint64_t seed, const NoiseConfig& noise = {});

/// Runs c from `initial` and samples `shots` outcomes. With depolarizing
/// noise every shot follows its own Pauli-insertion trajectory.
Counts simulate(const Circuit& c, const Statevector& initial, std::int64_t shots,
                std::uint64_t seed, const NoiseConfig& noise = {});

/// Keeps outcomes whose character at `position` equals `required`, drops that
/// character, and reports the kept fraction of the total weight.
/// Throws PostSelectionError when nothing survives.
template <typename T>
std::pair<BasicCounts<T>, double> post_select(const BasicCounts<T>& c, std::size_t position,
                                              char required = '0');

extern template std::pair<Counts, double> post_select(const Counts&, std::size_t, char);
extern template std::pair<QuasiCounts, double> post_select(const QuasiCounts&, std::size_t,
                                                           char);

}  // namespace qgtsim
