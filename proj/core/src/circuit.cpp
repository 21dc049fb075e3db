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

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <type_traits>

#include "qgtsim/errors.hpp"

namespace qgtsim {
namespace {

constexpr int kMaxQubits = 3;

void check_wire(int q, int n, const char* what) {
  if (q < 0 || q >= n) {
    std::ostringstream os;
    os << what << ": qubit " << q << " out of range for " << n << " qubits";
    throw ConfigError(os.str());
  }
}

int bit_of(int q, int n) { return n - 1 - q; }

std::string bitstring(std::size_t index, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((index >> (width - 1 - i)) & 1U) s[i] = '1';
  }
  return s;
}

// Probability vector over measured outcomes; entry i is the outcome whose
// bitstring is bitstring(i, measure.size()).
std::vector<double> born_vector(const Statevector& psi, const std::vector<int>& measure,
                                int n) {
  const std::size_t k = measure.size();
  std::vector<double> out(std::size_t{1} << k, 0.0);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    const double p = std::norm(psi[idx]);
    if (p == 0.0) continue;
    std::size_t key = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto bit = (static_cast<std::size_t>(idx) >> bit_of(measure[i], n)) & 1U;
      key = (key << 1) | bit;
    }
    out[key] += p;
  }
  return out;
}

void apply_readout(std::vector<double>& probs, std::size_t width, double q) {
  if (q == 0.0) return;
  for (std::size_t b = 0; b < width; ++b) {
    const std::size_t mask = std::size_t{1} << b;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (i & mask) continue;
      const double p0 = probs[i];
      const double p1 = probs[i | mask];
      probs[i] = (1.0 - q) * p0 + q * p1;
      probs[i | mask] = q * p0 + (1.0 - q) * p1;
    }
  }
}

// Draws `shots` outcomes by sequential conditional binomials and adds them to h.
void multinomial_into(const std::vector<double>& probs, std::int64_t shots, std::size_t width,
                      std::mt19937_64& rng, std::map<std::string, std::int64_t>& h) {
  double remaining_mass = 0.0;
  for (double p : probs) remaining_mass += p;
  std::int64_t remaining = shots;
  for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
    if (probs[i] <= 0.0) continue;
    std::int64_t k = remaining;
    const double frac = probs[i] / remaining_mass;
    if (frac < 1.0) {
      std::binomial_distribution<std::int64_t> draw(remaining, std::max(0.0, frac));
      k = draw(rng);
    }
    remaining_mass -= probs[i];
    remaining -= k;
    if (k > 0) h[bitstring(i, width)] += k;
  }
  if (remaining > 0) {
    // Rounding left mass unassigned; give it to the most likely outcome.
    const auto it = std::max_element(probs.begin(), probs.end());
    h[bitstring(static_cast<std::size_t>(it - probs.begin()), width)] += remaining;
  }
}

void check_measure(const std::vector<int>& measure, int n) {
  if (n < 1 || n > kMaxQubits) throw ConfigError("circuit: num_qubits must be in [1, 3]");
  for (std::size_t i = 0; i < measure.size(); ++i) {
    check_wire(measure[i], n, "measure");
    for (std::size_t j = 0; j < i; ++j) {
      if (measure[i] == measure[j]) throw ConfigError("measure: repeated qubit");
    }
  }
}

void check_normalized(const Statevector& psi, int n) {
  if (psi.size() != (Eigen::Index{1} << n)) {
    throw ConfigError("statevector dimension does not match the qubit count");
  }
  if (std::abs(psi.norm() - 1.0) > 1e-10) throw ConfigError("initial state is not normalized");
}

}  // namespace

Gate Gate::u3(int q, double theta, double phi, double lambda) {
  Gate g;
  g.kind = GateKind::kU3;
  g.q0 = q;
  g.theta = theta;
  g.phi = phi;
  g.lambda = lambda;
  return g;
}

Gate Gate::rx(int q, double theta) {
  Gate g;
  g.kind = GateKind::kRX;
  g.q0 = q;
  g.theta = theta;
  return g;
}

Gate Gate::ry(int q, double theta) {
  Gate g;
  g.kind = GateKind::kRY;
  g.q0 = q;
  g.theta = theta;
  return g;
}

Gate Gate::two_qubit(int q0, int q1, ComplexMatrix u) {
  Gate g;
  g.kind = GateKind::kTwoQubit;
  g.q0 = q0;
  g.q1 = q1;
  g.payload = std::move(u);
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = GateKind::kCNOT;
  g.q0 = control;
  g.q1 = target;
  return g;
}

std::vector<int> Gate::qubits() const {
  if (kind == GateKind::kTwoQubit || kind == GateKind::kCNOT) return {q0, q1};
  return {q0};
}

ComplexMatrix Gate::matrix() const {
  switch (kind) {
    case GateKind::kU3:
      return u3_matrix(theta, phi, lambda);
    case GateKind::kRX:
      return rx_matrix(theta);
    case GateKind::kRY:
      return ry_matrix(theta);
    case GateKind::kTwoQubit:
      return payload;
    case GateKind::kCNOT: {
      ComplexMatrix c = ComplexMatrix::Zero(4, 4);
      c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
      return c;
    }
  }
  throw ConfigError("unknown gate kind");
}

void Circuit::validate() const {
  check_measure(measure, num_qubits);
  for (const Gate& g : gates) {
    for (int q : g.qubits()) check_wire(q, num_qubits, "gate");
    if (g.kind == GateKind::kTwoQubit || g.kind == GateKind::kCNOT) {
      if (g.q0 == g.q1) throw ConfigError("two-qubit gate acts twice on one wire");
    }
    if (!std::isfinite(g.theta) || !std::isfinite(g.phi) || !std::isfinite(g.lambda)) {
      throw ConfigError("gate angle is not finite");
    }
    if (g.kind == GateKind::kTwoQubit) {
      if (g.payload.rows() != 4 || g.payload.cols() != 4 || !is_unitary(g.payload, 1e-10)) {
        throw ConfigError("two-qubit payload must be a 4x4 unitary");
      }
    }
  }
}

void NoiseConfig::validate() const {
  if (!(depolarizing_p >= 0.0 && depolarizing_p <= 1.0)) {
    throw ConfigError("depolarizing probability must lie in [0, 1]");
  }
  if (!(readout_q >= 0.0 && readout_q <= 0.5)) {
    throw ConfigError("readout flip probability must lie in [0, 0.5]");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  return base ^ splitmix64(index);
}

ComplexMatrix u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  ComplexMatrix u(2, 2);
  u(0, 0) = c;
  u(0, 1) = -std::polar(1.0, lambda) * s;
  u(1, 0) = std::polar(1.0, phi) * s;
  u(1, 1) = std::polar(1.0, phi + lambda) * c;
  return u;
}

ComplexMatrix rx_matrix(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  ComplexMatrix u(2, 2);
  u << c, Complex(0.0, -s), Complex(0.0, -s), c;
  return u;
}

ComplexMatrix ry_matrix(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  ComplexMatrix u(2, 2);
  u << c, -s, s, c;
  return u;
}

Statevector zero_state(int num_qubits) {
  Statevector psi = Statevector::Zero(Eigen::Index{1} << num_qubits);
  psi[0] = 1.0;
  return psi;
}

void apply_gate(const Gate& g, int n, Statevector& psi) {
  const ComplexMatrix u = g.matrix();
  const Eigen::Index dim = psi.size();
  if (g.kind == GateKind::kTwoQubit || g.kind == GateKind::kCNOT) {
    const Eigen::Index ma = Eigen::Index{1} << bit_of(g.q0, n);
    const Eigen::Index mb = Eigen::Index{1} << bit_of(g.q1, n);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & (ma | mb)) continue;
      const Eigen::Index idx[4] = {i, i | mb, i | ma, i | ma | mb};
      Complex in[4];
      for (int r = 0; r < 4; ++r) in[r] = psi[idx[r]];
      for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += u(r, c) * in[c];
        psi[idx[r]] = acc;
      }
    }
    return;
  }
  const Eigen::Index mask = Eigen::Index{1} << bit_of(g.q0, n);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const Complex a = psi[i];
    const Complex b = psi[i | mask];
    psi[i] = u(0, 0) * a + u(0, 1) * b;
    psi[i | mask] = u(1, 0) * a + u(1, 1) * b;
  }
}

Statevector run_statevector(const Circuit& c, const Statevector& initial) {
  c.validate();
  check_normalized(initial, c.num_qubits);
  Statevector psi = initial;
  for (const Gate& g : c.gates) apply_gate(g, c.num_qubits, psi);
  return psi;
}

QuasiCounts exact_distribution(const Statevector& psi, const std::vector<int>& measure,
                               int num_qubits) {
  check_measure(measure, num_qubits);
  const std::vector<double> probs = born_vector(psi, measure, num_qubits);
  QuasiCounts out;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) out.histogram[bitstring(i, measure.size())] = probs[i];
  }
  return out;
}

Counts sample_counts(const Statevector& psi, const std::vector<int>& measure, int num_qubits,
                     std::int64_t shots, std::uint64_t seed, const NoiseConfig& noise) {
  if (shots < 1) throw ConfigError("shots must be at least 1");
  check_measure(measure, num_qubits);
  noise.validate();
  std::vector<double> probs = born_vector(psi, measure, num_qubits);
  apply_readout(probs, measure.size(), noise.readout_q);
  Counts out;
  out.shots = shots;
  out.seed = seed;
  std::mt19937_64 rng(seed);
  multinomial_into(probs, shots, measure.size(), rng, out.histogram);
  return out;
}

Counts simulate(const Circuit& c, const Statevector& initial, std::int64_t shots,
                std::uint64_t seed, const NoiseConfig& noise) {
  noise.validate();
  if (shots < 1) throw ConfigError("shots must be at least 1");
  if (noise.depolarizing_p == 0.0) {
    return sample_counts(run_statevector(c, initial), c.measure, c.num_qubits, shots, seed,
                         noise);
  }
  c.validate();
  check_normalized(initial, c.num_qubits);

  // One trajectory per shot. Shots sharing an insertion pattern share a
  // statevector, so patterns are tallied first and each is sampled once.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<int> which(1, 3);
  std::size_t slots = 0;
  for (const Gate& g : c.gates) slots += g.qubits().size();
  std::map<std::vector<std::uint8_t>, std::int64_t> patterns;
  std::vector<std::uint8_t> pattern(slots);
  for (std::int64_t s = 0; s < shots; ++s) {
    for (auto& p : pattern) p = uniform(rng) < noise.depolarizing_p ? which(rng) : 0;
    ++patterns[pattern];
  }

  const std::array<const ComplexMatrix*, 3> paulis = {&pauli_x(), &pauli_y(), &pauli_z()};
  Counts out;
  out.shots = shots;
  out.seed = seed;
  for (const auto& [pat, count] : patterns) {
    Statevector psi = initial;
    std::size_t slot = 0;
    for (const Gate& g : c.gates) {
      apply_gate(g, c.num_qubits, psi);
      for (int q : g.qubits()) {
        const std::uint8_t p = pat[slot++];
        if (p == 0) continue;
        const ComplexMatrix& sigma = *paulis[p - 1];
        const Eigen::Index mask = Eigen::Index{1} << bit_of(q, c.num_qubits);
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
          if (i & mask) continue;
          const Complex a = psi[i];
          const Complex b = psi[i | mask];
          psi[i] = sigma(0, 0) * a + sigma(0, 1) * b;
          psi[i | mask] = sigma(1, 0) * a + sigma(1, 1) * b;
        }
      }
    }
    std::vector<double> probs = born_vector(psi, c.measure, c.num_qubits);
    apply_readout(probs, c.measure.size(), noise.readout_q);
    multinomial_into(probs, count, c.measure.size(), rng, out.histogram);
  }
  return out;
}

template <typename T>
std::pair<BasicCounts<T>, double> post_select(const BasicCounts<T>& c, std::size_t position,
                                              char required) {
  BasicCounts<T> out;
  out.seed = c.seed;
  T kept{};
  T total{};
  for (const auto& [key, value] : c.histogram) {
    if (position >= key.size()) throw ConfigError("post_select: ancilla position out of range");
    total += value;
    if (key[position] != required) continue;
    kept += value;
    std::string rest = key;
    rest.erase(position, 1);
    out.histogram[rest] += value;
  }
  if (!(kept > T{})) throw PostSelectionError("post-selection kept no outcomes");
  const double fraction = static_cast<double>(kept) / static_cast<double>(total);
  if constexpr (std::is_integral_v<T>) {
    out.shots = kept;
  } else {
    out.shots = std::llround(static_cast<double>(c.shots) * fraction);
  }
  return {out, fraction};
}

template std::pair<Counts, double> post_select(const Counts&, std::size_t, char);
template std::pair<QuasiCounts, double> post_select(const QuasiCounts&, std::size_t, char);

}  // namespace qgtsim
