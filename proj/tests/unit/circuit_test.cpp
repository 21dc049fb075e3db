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

#include "qgtsim/circuit.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qgtsim/errors.hpp"
#include "qgtsim/ite.hpp"

namespace qgtsim {
namespace {

constexpr double kPi = std::numbers::pi;

Statevector plus_state() {
  Statevector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

TEST(Gates, U3Examples) {
  EXPECT_LT(max_abs(u3_matrix(0, 0, 0) - identity2()), 1e-15);
  EXPECT_LT(max_abs(u3_matrix(kPi, 0, kPi) - pauli_x()), 1e-15);
  const Statevector v = u3_matrix(kPi / 2, 0, 0) * zero_state(1);
  EXPECT_NEAR(std::abs(v[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(v[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(Gates, AllUnitary) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> a(-7.0, 7.0);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(is_unitary(u3_matrix(a(rng), a(rng), a(rng)), 1e-12));
    EXPECT_TRUE(is_unitary(rx_matrix(a(rng)), 1e-12));
    EXPECT_TRUE(is_unitary(ry_matrix(a(rng)), 1e-12));
  }
}

TEST(Gates, RotationsMatchExponentials) {
  const double t = 0.83;
  // RX(t) = cos(t/2) I - i sin(t/2) X, RY likewise with Y.
  const ComplexMatrix want_x = std::cos(t / 2) * identity2() - kI * std::sin(t / 2) * pauli_x();
  const ComplexMatrix want_y = std::cos(t / 2) * identity2() - kI * std::sin(t / 2) * pauli_y();
  EXPECT_LT(max_abs(rx_matrix(t) - want_x), 1e-15);
  EXPECT_LT(max_abs(ry_matrix(t) - want_y), 1e-15);
}

TEST(RunStatevector, EmptyCircuitIsIdentity) {
  Circuit c;
  c.num_qubits = 2;
  const Statevector out = run_statevector(c, zero_state(2));
  EXPECT_LT((out - zero_state(2)).norm(), 1e-15);
}

TEST(RunStatevector, FlipTopWire) {
  Circuit c;
  c.num_qubits = 2;
  c.gates.push_back(Gate::u3(0, kPi, 0, kPi));
  const Statevector out = run_statevector(c, zero_state(2));
  // Qubit 0 is the high bit: |10> is index 2.
  EXPECT_NEAR(std::abs(out[2]), 1.0, 1e-15);
}

TEST(RunStatevector, CnotOrdering) {
  Circuit c;
  c.num_qubits = 2;
  c.gates.push_back(Gate::u3(0, kPi, 0, kPi));
  c.gates.push_back(Gate::cnot(0, 1));
  const Statevector out = run_statevector(c, zero_state(2));
  EXPECT_NEAR(std::abs(out[3]), 1.0, 1e-15);
}

TEST(RunStatevector, TwoQubitPayloadMatchesKron) {
  std::mt19937_64 rng(12);
  const ComplexMatrix a = oracle::random_unitary(2, rng), b = oracle::random_unitary(2, rng);
  const Statevector psi = oracle::random_state(8, rng);
  Circuit c;
  c.num_qubits = 3;
  c.gates.push_back(Gate::two_qubit(0, 2, kron(a, b)));
  Circuit d;
  d.num_qubits = 3;
  d.gates.push_back(Gate::two_qubit(2, 0, kron(b, a)));
  const Statevector want =
      oracle::kron2(oracle::kron2(a, ComplexMatrix::Identity(2, 2)), b) * psi;
  EXPECT_LT((run_statevector(c, psi) - want).norm(), 1e-13);
  EXPECT_LT((run_statevector(d, psi) - want).norm(), 1e-13);
}

TEST(RunStatevector, NormPreserved) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> a(0.0, 2 * kPi);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c;
    c.num_qubits = 3;
    for (int g = 0; g < 12; ++g) {
      c.gates.push_back(Gate::u3(g % 3, a(rng), a(rng), a(rng)));
      c.gates.push_back(Gate::two_qubit(g % 3, (g + 1) % 3, oracle::random_unitary(4, rng)));
    }
    EXPECT_NEAR(run_statevector(c, zero_state(3)).norm(), 1.0, 1e-10);
  }
}

TEST(RunStatevector, EmbeddedIteBlockOnUp) {
  // At (0, 0, m=1), H = -sigma_z and u U_TB |up> = |up>.
  const ComplexMatrix h = -pauli_z();
  const EmbeddingResult e = embed_unitary(ite_operator(h, 8.0), 8.0);
  Circuit c;
  c.num_qubits = 2;
  c.gates.push_back(Gate::two_qubit(0, 1, e.unitary));
  const Statevector out = run_statevector(c, zero_state(2));
  EXPECT_NEAR(std::abs(out[0] - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(out[1]), 0.0, 1e-12);
}

TEST(Circuit, Validation) {
  Circuit c;
  c.num_qubits = 2;
  c.gates.push_back(Gate::u3(2, 0, 0, 0));
  EXPECT_THROW(c.validate(), ConfigError);
  c.gates = {Gate::two_qubit(0, 1, ComplexMatrix::Ones(4, 4))};
  EXPECT_THROW(c.validate(), ConfigError);
  c.gates = {Gate::cnot(1, 1)};
  EXPECT_THROW(c.validate(), ConfigError);
  c.gates.clear();
  c.measure = {0, 0};
  EXPECT_THROW(c.validate(), ConfigError);
  c.num_qubits = 4;
  c.measure = {};
  EXPECT_THROW(c.validate(), ConfigError);
  Circuit ok;
  ok.num_qubits = 1;
  EXPECT_THROW(run_statevector(ok, 2.0 * zero_state(1)), ConfigError);
}

TEST(Sampling, DeterministicUp) {
  const Counts c = sample_counts(zero_state(1), {0}, 1, 100000, 5);
  ASSERT_EQ(c.histogram.size(), 1U);
  EXPECT_EQ(c.histogram.at("0"), 100000);
  EXPECT_EQ(c.shots, 100000);
}

TEST(Sampling, PlusStateConcentration) {
  const Counts c = sample_counts(plus_state(), {0}, 1, 100000, 42);
  EXPECT_EQ(c.total(), 100000);
  EXPECT_LT(std::abs(c.histogram.at("0") / 1e5 - 0.5), 0.01);
}

TEST(Sampling, ReadoutFlips) {
  NoiseConfig noise;
  noise.readout_q = 0.1;
  const Counts c = sample_counts(zero_state(1), {0}, 1, 100000, 43, noise);
  EXPECT_NEAR(c.histogram.at("1") / 1e5, 0.1, 0.006);
}

TEST(Sampling, BornFrequenciesWithinSixSigma) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Statevector psi = oracle::random_state(4, rng);
    const std::int64_t shots = 20000;
    const Counts c = sample_counts(psi, {0, 1}, 2, shots, 100 + trial);
    for (int i = 0; i < 4; ++i) {
      const std::string key = std::string(1, i & 2 ? '1' : '0') + (i & 1 ? '1' : '0');
      const double p = std::norm(psi[i]);
      const double f = c.histogram.count(key) ? c.histogram.at(key) / double(shots) : 0.0;
      EXPECT_LE(std::abs(f - p), 6.0 * std::sqrt(p * (1 - p) / shots) + 1e-12);
    }
  }
}

TEST(Sampling, MarginalizesAndOrdersBits) {
  // |01> on two wires, measure only wire 1 then the pair in reverse order.
  Statevector psi = Statevector::Zero(4);
  psi[1] = 1.0;
  EXPECT_EQ(sample_counts(psi, {1}, 2, 10, 1).histogram.at("1"), 10);
  EXPECT_EQ(sample_counts(psi, {1, 0}, 2, 10, 1).histogram.at("10"), 10);
  EXPECT_EQ(sample_counts(psi, {0, 1}, 2, 10, 1).histogram.at("01"), 10);
}

TEST(Sampling, SameSeedSameCounts) {
  Circuit c;
  c.num_qubits = 2;
  c.gates = {Gate::u3(0, 1.1, 0.2, 0.3), Gate::u3(1, 0.4, 0.5, 0.6), Gate::cnot(0, 1)};
  c.measure = {0, 1};
  NoiseConfig noise{0.05, 0.02};
  const Counts a = simulate(c, zero_state(2), 5000, 9, noise);
  const Counts b = simulate(c, zero_state(2), 5000, 9, noise);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.total(), 5000);
  const Counts d = simulate(c, zero_state(2), 5000, 10, noise);
  EXPECT_NE(a.histogram, d.histogram);
}

TEST(Sampling, DepolarizingMatchesChannel) {
  // One identity gate followed by depolarizing p on |0>: P(1) = 2p/3.
  Circuit c;
  c.num_qubits = 1;
  c.gates = {Gate::u3(0, 0, 0, 0)};
  c.measure = {0};
  const double p = 0.3;
  const std::int64_t shots = 200000;
  const Counts counts = simulate(c, zero_state(1), shots, 21, {p, 0.0});
  const double f = counts.histogram.at("1") / double(shots);
  const double want = 2 * p / 3;
  EXPECT_LT(std::abs(f - want), 6 * std::sqrt(want * (1 - want) / shots));
}

TEST(Sampling, RejectsBadArguments) {
  EXPECT_THROW(sample_counts(zero_state(1), {0}, 1, 0, 1), ConfigError);
  EXPECT_THROW(sample_counts(zero_state(1), {0}, 1, 10, 1, {0.0, 0.7}), ConfigError);
  EXPECT_THROW(sample_counts(zero_state(1), {0}, 1, 10, 1, {1.5, 0.0}), ConfigError);
}

TEST(PostSelect, Example) {
  Counts c;
  c.shots = 1000;
  c.histogram = {{"00", 400}, {"01", 100}, {"10", 300}, {"11", 200}};
  const auto [kept, frac] = post_select(c, 0, '0');
  EXPECT_DOUBLE_EQ(frac, 0.5);
  EXPECT_EQ(kept.histogram.at("0"), 400);
  EXPECT_EQ(kept.histogram.at("1"), 100);
  EXPECT_EQ(kept.shots, 500);
}

TEST(PostSelect, NothingSurvives) {
  Counts c;
  c.shots = 10;
  c.histogram = {{"10", 4}, {"11", 6}};
  EXPECT_THROW(post_select(c, 0, '0'), PostSelectionError);
}

TEST(PostSelect, QuasiCounts) {
  QuasiCounts c;
  c.shots = 100;
  c.histogram = {{"00", 0.25}, {"10", 0.75}};
  const auto [kept, frac] = post_select(c, 0, '1');
  EXPECT_DOUBLE_EQ(frac, 0.75);
  EXPECT_EQ(kept.shots, 75);
}

TEST(Seeds, MixIsStableAndSpreads) {
  EXPECT_EQ(mix_seed(0, 0), splitmix64(0));
  EXPECT_NE(mix_seed(1, 2), mix_seed(1, 3));
  EXPECT_EQ(mix_seed(7, 3), mix_seed(7, 3));
}

}  // namespace
}  // namespace qgtsim
